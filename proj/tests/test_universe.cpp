#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pdx/universe.hpp"

using namespace pdx;

namespace {

Origin at(int line, const char* reason = "") { return Origin{"test", line, reason}; }

// Brute-force oracle: backtracking search for an assignment of levels to
// naturals in {0..12} satisfying every constraint (Le -> <=, Lt -> <).
struct OracleConstraint {
  std::size_t a;
  std::size_t b;
  bool strict;
};

bool oracle_search(std::vector<int>& value, std::size_t next, std::size_t n,
                   const std::vector<OracleConstraint>& cs) {
  if (next == n) return true;
  for (int v = 0; v <= 12; ++v) {
    value[next] = v;
    bool ok = true;
    for (const auto& c : cs) {
      if (c.a > next || c.b > next) continue;
      int va = value[c.a], vb = value[c.b];
      if (c.strict ? va >= vb : va > vb) {
        ok = false;
        break;
      }
    }
    if (ok && oracle_search(value, next + 1, n, cs)) return true;
  }
  value[next] = -1;
  return false;
}

bool oracle_satisfiable(std::size_t n, const std::vector<OracleConstraint>& cs) {
  std::vector<int> value(n, -1);
  return oracle_search(value, 0, n, cs);
}

}  // namespace

TEST_CASE("fresh levels are isolated and distinct") {
  UniverseGraph g = UniverseGraph::make(false);
  LevelId a = g.fresh_level(at(1));
  CHECK(g.node_count() == 1);
  CHECK(g.edges().empty());
  LevelId b = g.fresh_level(at(2));
  CHECK(a != b);
  CHECK_FALSE(g.check_consistency().has_value());
}

TEST_CASE("the Burali-Forti constraint pair is a two edge cycle") {
  UniverseGraph g = UniverseGraph::make(false);
  LevelId j = g.fresh_level(at(1, "inner Type"));
  LevelId i = g.fresh_level(at(2, "record Type"));
  CHECK_FALSE(g.add_constraint({j, ConstraintKind::Lt, i, at(3, "record stores a type")}));
  auto report = g.add_constraint({i, ConstraintKind::Le, j, at(4, "instantiation")});
  REQUIRE(report.has_value());
  REQUIRE(report->cycle.size() == 2);
  // Oldest constraint leads: j < i by Lt, then i <= j by Le.
  CHECK(report->cycle[0].from == j);
  CHECK(report->cycle[0].to == i);
  CHECK(report->cycle[0].weight == 1);
  CHECK(report->cycle[1].from == i);
  CHECK(report->cycle[1].to == j);
  CHECK(report->cycle[1].weight == 0);
  CHECK(g.cycle_is_genuine(*report) == false);  // rejected edge was rolled back
  std::string text = report->render(g);
  CHECK(text.find(" < ") != std::string::npos);
  CHECK(text.find(" <= ") != std::string::npos);
}

TEST_CASE("self loops") {
  UniverseGraph g = UniverseGraph::make(false);
  LevelId a = g.fresh_level(at(1));
  CHECK_FALSE(g.add_constraint({a, ConstraintKind::Le, a, at(2)}));
  CHECK_FALSE(g.check_consistency().has_value());
  auto report = g.add_constraint({a, ConstraintKind::Lt, a, at(3)});
  REQUIRE(report.has_value());
  CHECK(report->cycle.size() == 1);
}

TEST_CASE("derived examples agree with the brute-force oracle") {
  // {Lt(a,b), Lt(b,c), Le(c,a)} is unsatisfiable; {Le,Le,Le} collapses.
  CHECK_FALSE(oracle_satisfiable(3, {{0, 1, true}, {1, 2, true}, {2, 0, false}}));
  CHECK(oracle_satisfiable(3, {{0, 1, false}, {1, 2, false}, {2, 0, false}}));

  UniverseGraph g = UniverseGraph::make(false);
  LevelId a = g.fresh_level(at(1)), b = g.fresh_level(at(2)), c = g.fresh_level(at(3));
  CHECK_FALSE(g.add_constraint({a, ConstraintKind::Lt, b, at(4)}));
  CHECK_FALSE(g.add_constraint({b, ConstraintKind::Lt, c, at(5)}));
  auto report = g.add_constraint({c, ConstraintKind::Le, a, at(6)});
  CHECK(report.has_value());

  UniverseGraph h = UniverseGraph::make(false);
  LevelId x = h.fresh_level(at(1)), y = h.fresh_level(at(2)), z = h.fresh_level(at(3));
  CHECK_FALSE(h.add_constraint({x, ConstraintKind::Le, y, at(4)}));
  CHECK_FALSE(h.add_constraint({y, ConstraintKind::Le, z, at(5)}));
  CHECK_FALSE(h.add_constraint({z, ConstraintKind::Le, x, at(6)}));
  CHECK_FALSE(h.check_consistency().has_value());
}

TEST_CASE("eq constraints are stored as a Le pair") {
  UniverseGraph g = UniverseGraph::make(false);
  LevelId a = g.fresh_level(at(1)), b = g.fresh_level(at(2));
  CHECK_FALSE(g.add_constraint({a, ConstraintKind::Eq, b, at(3)}));
  CHECK(g.edges().size() == 2);
  auto report = g.add_constraint({a, ConstraintKind::Lt, b, at(4)});
  CHECK(report.has_value());
}

TEST_CASE("unstratified graphs accept everything") {
  UniverseGraph g = UniverseGraph::make(false);
  g.set_stratified(false);
  LevelId a = g.fresh_level(at(1));
  CHECK_FALSE(g.add_constraint({a, ConstraintKind::Lt, a, at(2)}));
  CHECK_FALSE(g.check_consistency().has_value());
}

TEST_CASE("oracle equivalence on random constraint sets") {
  std::mt19937 rng(20240901);
  int agreements = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(1, 6);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> md(0, 12);
    std::size_t m = md(rng);
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);

    UniverseGraph g = UniverseGraph::make(false);
    std::vector<LevelId> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(g.fresh_level(at(int(i))));

    std::vector<OracleConstraint> oc;
    bool graph_consistent = true;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t a = node(rng), b = node(rng);
      int rel = kind(rng);
      ConstraintKind ck = rel == 0   ? ConstraintKind::Le
                          : rel == 1 ? ConstraintKind::Lt
                                     : ConstraintKind::Eq;
      if (rel == 0) {
        oc.push_back({a, b, false});
      } else if (rel == 1) {
        oc.push_back({a, b, true});
      } else {
        oc.push_back({a, b, false});
        oc.push_back({b, a, false});
      }
      if (g.add_constraint({ids[a], ck, ids[b], at(int(k))})) {
        graph_consistent = false;
        break;  // graph unchanged after rejection; oracle must agree
      }
    }
    bool oracle_ok = oracle_satisfiable(n, oc);
    CHECK(graph_consistent == oracle_ok);
    if (graph_consistent == oracle_ok) ++agreements;

    // Reports, when produced, carry genuine positive-weight cycles.
    if (auto rep = g.check_consistency()) {
      CHECK(g.cycle_is_genuine(*rep));
    }
  }
  CHECK(agreements == 1200);
}

TEST_CASE("monotonicity: extending an inconsistent set keeps it inconsistent") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<OracleConstraint> oc;
    std::uniform_int_distribution<std::size_t> nd(2, 5);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    // Seed an inconsistency, then add noise.
    std::size_t a = node(rng), b = node(rng);
    while (b == a) b = node(rng);
    oc.push_back({a, b, true});
    oc.push_back({b, a, false});
    CHECK_FALSE(oracle_satisfiable(n, oc));
    for (int k = 0; k < 5; ++k) {
      oc.push_back({node(rng), node(rng), k % 2 == 0});
      CHECK_FALSE(oracle_satisfiable(n, oc));
    }
  }
}
