// The typing judgment for the profile-parameterized PTS with inductive
// types: inference and checking, product rules, inductive declaration with
// positivity and recursor generation, sections with discharge.
#ifndef PDX_KERNEL_HPP
#define PDX_KERNEL_HPP

#include <set>
#include <string>
#include <vector>

#include "pdx/env.hpp"
#include "pdx/reduce.hpp"

namespace pdx {

using Telescope = std::vector<Binder>;

// Sort of a product from the sorts of its domain and codomain.  CIC-family
// rules allocate fresh levels for predicative products; SystemU profiles
// consult the rule table and reject missing pairs with RuleViolation.
Sort product_sort(GlobalEnv& env, const Sort& domain, const Sort& codomain);

TermPtr infer_type(GlobalEnv& env, const Telescope& ctx, const TermPtr& t);

// The inferred type reduced to a sort; TypeMismatch when it is not one.
Sort infer_sort(GlobalEnv& env, const Telescope& ctx, const TermPtr& t);

// Checking mode.  When `expected` is a sort and `t` a product, the product
// rule into that sort is demanded directly, so a missing impredicative rule
// reports RuleViolation naming the pair.
void check_type(GlobalEnv& env, const Telescope& ctx, const TermPtr& t,
                const TermPtr& expected);

void declare_definition(GlobalEnv& env, const std::string& name, TermPtr type_opt,
                        TermPtr body, bool opaque);

enum class BinderKind { Variable, Hypothesis, Axiom };
void declare_variable(GlobalEnv& env, const std::string& name, TermPtr type,
                      BinderKind kind);

struct InductiveDecl {
  std::string name;
  Telescope params;                  // checked left to right
  TermPtr arity;                     // in context `params`, ends in a sort
  std::vector<std::pair<std::string, TermPtr>> ctors;  // types in ctx `params`
};

void declare_inductive(GlobalEnv& env, const InductiveDecl& decl);

std::set<Sort::Kind> eliminator_targets(GlobalEnv& env, const InductiveInfo& ind);

void begin_section(GlobalEnv& env, const std::string& name);
void end_section(GlobalEnv& env, const std::string& name);

}  // namespace pdx

#endif
