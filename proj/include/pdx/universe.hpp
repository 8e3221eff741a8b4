// Universe levels, the <= / < constraint graph, and its consistency check.
// Consistent means: no directed cycle of total weight >= 1, where Le edges
// weigh 0 and Lt edges weigh 1.
#ifndef PDX_UNIVERSE_HPP
#define PDX_UNIVERSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdx/term.hpp"

namespace pdx {

struct Origin {
  std::string file;
  int line = 0;
  std::string reason;

  std::string render() const;
};

enum class ConstraintKind { Le, Lt, Eq };

struct Constraint {
  LevelId lhs = 0;
  ConstraintKind rel = ConstraintKind::Le;
  LevelId rhs = 0;
  Origin origin;
};

struct GraphEdge {
  LevelId from = 0;
  LevelId to = 0;
  int weight = 0;  // 0 = Le, 1 = Lt
  Origin origin;
  std::uint64_t serial = 0;  // insertion order, for deterministic reports
};

struct InconsistencyReport {
  std::vector<GraphEdge> cycle;  // ordered; total weight >= 1
  std::string render(const class UniverseGraph& graph) const;
};

class UniverseGraph {
 public:
  // cic_base seeds the Prop and Set nodes with Le(Prop, Set).
  static UniverseGraph make(bool cic_base);

  // When unstratified (type-in-type), add_constraint always succeeds and
  // check_consistency always answers Consistent.
  void set_stratified(bool stratified) { stratified_ = stratified; }
  bool stratified() const { return stratified_; }

  LevelId fresh_level(Origin origin);
  std::size_t node_count() const { return origins_.size(); }
  const Origin& level_origin(LevelId l) const { return origins_[l]; }
  std::string level_name(LevelId l) const;

  // On success returns nullopt and the graph includes the new edge(s); on
  // failure the graph is left unchanged and a witness cycle is returned.
  std::optional<InconsistencyReport> add_constraint(const Constraint& c);

  std::optional<InconsistencyReport> check_consistency() const;

  const std::vector<GraphEdge>& edges() const { return edges_; }

  // True iff every cycle edge is present in the graph, consecutive edges
  // chain up, the cycle closes, and the total weight is >= 1.
  bool cycle_is_genuine(const InconsistencyReport& report) const;

 private:
  std::optional<InconsistencyReport> closing_cycle(const GraphEdge& candidate) const;

  bool stratified_ = true;
  std::vector<Origin> origins_;                 // node id -> origin
  std::vector<std::vector<std::size_t>> out_;   // node id -> edge indices
  std::vector<GraphEdge> edges_;
  std::uint64_t next_serial_ = 0;
};

}  // namespace pdx

#endif
