// Term representation: de Bruijn syntax tree for the dependent lambda
// calculus, plus lifting, substitution and syntactic equality.
#ifndef PDX_TERM_HPP
#define PDX_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace pdx {

using LevelId = std::uint32_t;

// Fixed positions of Prop and Set in the cumulativity order.
inline constexpr LevelId kLevelProp = 0;
inline constexpr LevelId kLevelSet = 1;
inline constexpr LevelId kFirstFreshLevel = 2;

struct Sort {
  enum class Kind { Prop, Set, Type, Star, Box, Triangle };
  Kind kind = Kind::Prop;
  LevelId level = 0;  // meaningful only for Kind::Type

  bool operator==(const Sort& other) const {
    if (kind != other.kind) return false;
    return kind != Kind::Type || level == other.level;
  }
  bool is_cic_family() const {
    return kind == Kind::Prop || kind == Kind::Set || kind == Kind::Type;
  }
};

Sort sort_prop();
Sort sort_set();
Sort sort_type(LevelId level);
Sort sort_star();
Sort sort_box();
Sort sort_triangle();

std::string sort_name(const Sort& s);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  struct SortRef {
    Sort sort;
  };
  struct Var {
    std::size_t index;  // 0 = innermost binder
  };
  struct ConstRef {
    std::string name;
  };
  struct Pi {
    std::string hint;
    TermPtr domain;
    TermPtr codomain;  // under one extra binder
  };
  struct Lam {
    std::string hint;
    TermPtr domain;
    TermPtr body;  // under one extra binder
  };
  struct App {
    TermPtr fn;
    TermPtr arg;
  };

  std::variant<SortRef, Var, ConstRef, Pi, Lam, App> node;

  // Least n such that the term is well-scoped under n binders.  0 means
  // closed.  Lets lift/subst share untouched subtrees.
  std::size_t fv_bound = 0;

  const SortRef* as_sort() const { return std::get_if<SortRef>(&node); }
  const Var* as_var() const { return std::get_if<Var>(&node); }
  const ConstRef* as_const() const { return std::get_if<ConstRef>(&node); }
  const Pi* as_pi() const { return std::get_if<Pi>(&node); }
  const Lam* as_lam() const { return std::get_if<Lam>(&node); }
  const App* as_app() const { return std::get_if<App>(&node); }
};

TermPtr mk_sort(Sort s);
TermPtr mk_prop();
TermPtr mk_set();
TermPtr mk_type(LevelId level);
TermPtr mk_var(std::size_t index);
TermPtr mk_const(std::string name);
TermPtr mk_pi(std::string hint, TermPtr domain, TermPtr codomain);
TermPtr mk_lam(std::string hint, TermPtr domain, TermPtr body);
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_app(TermPtr fn, const std::vector<TermPtr>& args);

// Non-dependent product: domain -> codomain (codomain lifted past the binder).
TermPtr mk_arrow(TermPtr domain, TermPtr codomain);

// Every free Var index >= cutoff is increased by amount.
TermPtr lift(const TermPtr& t, std::size_t amount, std::size_t cutoff);

// Occurrences of Var(target) are replaced by `replacement` lifted past
// intervening binders; indices above target are decremented.
TermPtr subst(const TermPtr& t, std::size_t target, const TermPtr& replacement);

// Structural identity up to binder hints; Type levels compare by identity.
bool syntactic_eq(const TermPtr& t, const TermPtr& u);

// Application spine: collect_spine(App(App(f,a),b)) -> (f, [a,b]).
struct Spine {
  TermPtr head;
  std::vector<TermPtr> args;
};
Spine collect_spine(const TermPtr& t);

bool occurs_const(const TermPtr& t, const std::string& name);

// Debug rendering with raw de Bruijn indices; the surface printer lives in
// syntax.hpp.
std::string debug_string(const TermPtr& t);

}  // namespace pdx

#endif
