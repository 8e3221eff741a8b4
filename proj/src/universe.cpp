#include "pdx/universe.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace pdx {

std::string Origin::render() const {
  std::ostringstream out;
  out << file << ":" << line;
  if (!reason.empty()) out << ": " << reason;
  return out.str();
}

UniverseGraph UniverseGraph::make(bool cic_base) {
  UniverseGraph g;
  if (cic_base) {
    g.fresh_level(Origin{"<builtin>", 0, "the Prop level"});
    g.fresh_level(Origin{"<builtin>", 0, "the Set level"});
    g.add_constraint(Constraint{kLevelProp, ConstraintKind::Le, kLevelSet,
                                Origin{"<builtin>", 0, "Prop <= Set cumulativity"}});
  }
  return g;
}

LevelId UniverseGraph::fresh_level(Origin origin) {
  LevelId id = static_cast<LevelId>(origins_.size());
  origins_.push_back(std::move(origin));
  out_.emplace_back();
  return id;
}

std::string UniverseGraph::level_name(LevelId l) const {
  if (l == kLevelProp && origins_.size() > kLevelProp &&
      origins_[kLevelProp].file == "<builtin>")
    return "Prop";
  if (l == kLevelSet && origins_.size() > kLevelSet &&
      origins_[kLevelSet].file == "<builtin>")
    return "Set";
  return "u" + std::to_string(l);
}

// Shortest cycle through `candidate`, preferring total weight >= 1.  The
// search runs over (node, has the path weight reached 1 yet) states so a
// zero-weight candidate edge still finds a returning path containing an Lt.
std::optional<InconsistencyReport> UniverseGraph::closing_cycle(
    const GraphEdge& candidate) const {
  const std::size_t n = origins_.size();
  const int need = candidate.weight >= 1 ? 0 : 1;
  // parent[v][w] = edge index used to reach state (v, w); -1 unvisited.
  std::vector<std::array<std::ptrdiff_t, 2>> parent(n, {-2, -2});
  std::deque<std::pair<LevelId, int>> queue;
  parent[candidate.to][0] = -1;
  queue.emplace_back(candidate.to, 0);
  while (!queue.empty()) {
    auto [v, w] = queue.front();
    queue.pop_front();
    if (v == candidate.from && w >= need) {
      std::vector<GraphEdge> path;
      LevelId cur = v;
      int cw = w;
      while (parent[cur][cw] >= 0) {
        const GraphEdge& e = edges_[static_cast<std::size_t>(parent[cur][cw])];
        path.push_back(e);
        cur = e.from;
        cw = std::max(0, cw - e.weight);
      }
      std::reverse(path.begin(), path.end());
      InconsistencyReport report;
      report.cycle.push_back(candidate);
      for (auto& e : path) report.cycle.push_back(e);
      // Rotate so the oldest constraint leads; keeps reports stable.
      auto oldest = std::min_element(
          report.cycle.begin(), report.cycle.end(),
          [](const GraphEdge& a, const GraphEdge& b) { return a.serial < b.serial; });
      std::rotate(report.cycle.begin(), oldest, report.cycle.end());
      return report;
    }
    for (std::size_t idx : out_[v]) {
      const GraphEdge& e = edges_[idx];
      int nw = std::min(1, w + e.weight);
      if (parent[e.to][nw] == -2) {
        parent[e.to][nw] = static_cast<std::ptrdiff_t>(idx);
        queue.emplace_back(e.to, nw);
      }
    }
  }
  return std::nullopt;
}

std::optional<InconsistencyReport> UniverseGraph::add_constraint(const Constraint& c) {
  if (!stratified_) return std::nullopt;
  std::vector<GraphEdge> pending;
  auto push = [&](LevelId from, LevelId to, int weight) {
    pending.push_back(GraphEdge{from, to, weight, c.origin, 0});
  };
  switch (c.rel) {
    case ConstraintKind::Le: push(c.lhs, c.rhs, 0); break;
    case ConstraintKind::Lt: push(c.lhs, c.rhs, 1); break;
    case ConstraintKind::Eq:
      push(c.lhs, c.rhs, 0);
      push(c.rhs, c.lhs, 0);
      break;
  }
  std::size_t added = 0;
  for (auto& e : pending) {
    // Zero-weight self-loops are vacuous; strict ones are immediate cycles.
    if (e.from == e.to && e.weight == 0) continue;
    e.serial = next_serial_;
    if (auto cyc = closing_cycle(e)) {
      while (added--) {
        out_[edges_.back().from].pop_back();
        edges_.pop_back();
      }
      return cyc;
    }
    next_serial_++;
    out_[e.from].push_back(edges_.size());
    edges_.push_back(e);
    added++;
  }
  return std::nullopt;
}

std::optional<InconsistencyReport> UniverseGraph::check_consistency() const {
  if (!stratified_) return std::nullopt;
  // Every edge was admitted by add_constraint, so scanning for an Lt edge
  // whose endpoints are mutually reachable re-validates from scratch.
  for (const auto& e : edges_) {
    if (e.weight >= 1 || e.from == e.to) {
      if (auto cyc = closing_cycle(e)) return cyc;
    }
  }
  return std::nullopt;
}

bool UniverseGraph::cycle_is_genuine(const InconsistencyReport& report) const {
  if (report.cycle.empty()) return false;
  int total = 0;
  for (std::size_t i = 0; i < report.cycle.size(); ++i) {
    const GraphEdge& e = report.cycle[i];
    bool found = false;
    for (std::size_t idx : out_[e.from]) {
      const GraphEdge& g = edges_[idx];
      if (g.to == e.to && g.weight == e.weight && g.serial == e.serial) {
        found = true;
        break;
      }
    }
    if (!found) return false;
    const GraphEdge& next = report.cycle[(i + 1) % report.cycle.size()];
    if (e.to != next.from) return false;
    total += e.weight;
  }
  return total >= 1;
}

std::string InconsistencyReport::render(const UniverseGraph& graph) const {
  std::ostringstream out;
  for (const auto& e : cycle) {
    out << "  " << graph.level_name(e.from) << (e.weight >= 1 ? " < " : " <= ")
        << graph.level_name(e.to) << "   -- introduced at " << e.origin.render()
        << "\n";
  }
  return out.str();
}

}  // namespace pdx
