// The global environment: checked constants, inductive declarations,
// generated recursors, the universe graph, and the open-section stack.
#ifndef PDX_ENV_HPP
#define PDX_ENV_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdx/errors.hpp"
#include "pdx/profile.hpp"
#include "pdx/term.hpp"
#include "pdx/universe.hpp"

namespace pdx {

struct Binder {
  std::string hint;
  TermPtr type;
};

struct CtorArg {
  TermPtr type;     // in context [params..., earlier args...]
  bool recursive = false;
};

struct CtorInfo {
  std::string name;
  TermPtr full_type;  // closed: forall params, <constructor type>
  std::vector<CtorArg> args;
};

struct InductiveInfo {
  std::string name;
  std::vector<Binder> params;
  std::size_t n_params = 0;
  std::size_t n_indices = 0;
  TermPtr full_arity;  // closed: forall params indices, <sort>
  Sort sort;
  std::vector<std::string> ctor_names;
  std::vector<std::string> recursor_names;
};

struct RecursorInfo {
  std::string ind;
  Sort::Kind target = Sort::Kind::Prop;
  bool allowed = true;  // elimination policy gate
  TermPtr type;         // closed
  std::size_t n_params = 0;
  std::size_t n_branches = 0;
  std::size_t n_indices = 0;
};

struct ConstInfo {
  enum class Kind { Definition, Axiom, SectionVar, Inductive, Constructor, Recursor };
  Kind kind = Kind::Definition;
  TermPtr type;
  TermPtr body;  // null unless Definition
  bool opaque = false;
  bool is_hypothesis = false;   // SectionVar only
  std::string ind;              // Constructor/Recursor: owning inductive
  std::size_t ctor_index = 0;   // Constructor only
};

struct SectionFrame {
  std::string name;
  std::vector<std::string> vars;    // declaration order
  std::vector<std::string> consts;  // declaration order
};

// Recursors are named <inductive>_ind / _rec / _rect by target family.
std::string recursor_name(const std::string& ind, Sort::Kind target);

class GlobalEnv {
 public:
  explicit GlobalEnv(const Profile* profile)
      : profile_(profile), graph_(UniverseGraph::make(profile->is_cic())) {
    graph_.set_stratified(profile->stratified);
  }

  const Profile& profile() const { return *profile_; }
  UniverseGraph& graph() { return graph_; }
  const UniverseGraph& graph() const { return graph_; }

  const ConstInfo* lookup(const std::string& name) const;
  const InductiveInfo* lookup_inductive(const std::string& name) const;
  const RecursorInfo* lookup_recursor(const std::string& name) const;
  const CtorInfo* lookup_ctor(const std::string& name) const;
  bool has_name(const std::string& name) const { return consts_.count(name) > 0; }

  void add_const(const std::string& name, ConstInfo info);
  void add_inductive_meta(const std::string& name, InductiveInfo info);
  void add_recursor_meta(const std::string& name, RecursorInfo info);
  void add_ctor_meta(const std::string& name, CtorInfo info);
  void remove_const(const std::string& name);
  void replace_const(const std::string& name, ConstInfo info);

  const std::vector<std::string>& declaration_order() const { return order_; }

  bool in_section() const { return !sections_.empty(); }
  std::vector<SectionFrame>& sections() { return sections_; }
  const std::vector<SectionFrame>& sections() const { return sections_; }

  // All section variables currently in scope, outermost first.
  std::vector<std::string> visible_section_vars() const;

  // Fresh Type level; under cumulativity it sits above Set.
  LevelId fresh_type_level(const Origin& origin);

  // Adds and throws CheckError(UniverseInconsistency) on failure.
  void require_constraint(const Constraint& c);

  // Source position used for constraint origins while checking.
  Origin current_origin;

 private:
  const Profile* profile_;
  UniverseGraph graph_;
  std::vector<std::string> order_;
  std::unordered_map<std::string, ConstInfo> consts_;
  std::unordered_map<std::string, InductiveInfo> inductives_;
  std::unordered_map<std::string, RecursorInfo> recursors_;
  std::unordered_map<std::string, CtorInfo> ctors_;
  std::vector<SectionFrame> sections_;
};

}  // namespace pdx

#endif
