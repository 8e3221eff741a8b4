#include "pdx/kernel.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace pdx {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw CheckError(kind, message);
}

LevelId level_of(const Sort& s) {
  switch (s.kind) {
    case Sort::Kind::Prop: return kLevelProp;
    case Sort::Kind::Set: return kLevelSet;
    default: return s.level;
  }
}

Origin origin_with(const GlobalEnv& env, std::string reason) {
  Origin o = env.current_origin;
  o.reason = std::move(reason);
  return o;
}

bool sort_le(GlobalEnv& env, const Sort& a, const Sort& b) {
  return convertible(env, mk_sort(a), mk_sort(b), ConvMode::CumulLeftLe);
}

}  // namespace

Sort product_sort(GlobalEnv& env, const Sort& domain, const Sort& codomain) {
  const Profile& prof = env.profile();
  if (prof.is_cic()) {
    if (!domain.is_cic_family() || !codomain.is_cic_family())
      fail(ErrorKind::RuleViolation,
           "sorts " + sort_name(domain) + " and " + sort_name(codomain) +
               " do not both belong to the CIC sort family of profile " + prof.name);
    switch (codomain.kind) {
      case Sort::Kind::Prop:
        return sort_prop();  // Prop is impredicative in every CIC profile
      case Sort::Kind::Set:
        if (prof.impredicative_set || domain.kind == Sort::Kind::Prop ||
            domain.kind == Sort::Kind::Set)
          return sort_set();
        else {
          LevelId k = env.fresh_type_level(origin_with(env, "sort of a product into Set"));
          env.require_constraint(Constraint{level_of(domain), ConstraintKind::Le, k,
                                            origin_with(env, "product domain level")});
          env.require_constraint(Constraint{kLevelSet, ConstraintKind::Le, k,
                                            origin_with(env, "product codomain level")});
          return sort_type(k);
        }
      default: {
        LevelId k = env.fresh_type_level(origin_with(env, "sort of a product"));
        env.require_constraint(Constraint{level_of(domain), ConstraintKind::Le, k,
                                          origin_with(env, "product domain level")});
        env.require_constraint(Constraint{codomain.level, ConstraintKind::Le, k,
                                          origin_with(env, "product codomain level")});
        return sort_type(k);
      }
    }
  }
  if (domain.is_cic_family() || codomain.is_cic_family())
    fail(ErrorKind::RuleViolation,
         "sorts " + sort_name(domain) + " and " + sort_name(codomain) +
             " do not both belong to the System U sort family of profile " + prof.name);
  if (auto r = prof.rule_for(domain.kind, codomain.kind)) return Sort{*r, 0};
  fail(ErrorKind::RuleViolation, "no product rule (" + sort_name(domain) + ", " +
                                     sort_name(codomain) + ") in profile " + prof.name);
}

TermPtr infer_type(GlobalEnv& env, const Telescope& ctx, const TermPtr& t) {
  if (auto s = t->as_sort()) {
    const Profile& prof = env.profile();
    if (prof.is_cic()) {
      if (!s->sort.is_cic_family())
        fail(ErrorKind::RuleViolation, "sort " + sort_name(s->sort) +
                                           " is not available under profile " + prof.name);
      if (s->sort.kind == Sort::Kind::Type) {
        LevelId j = env.fresh_type_level(origin_with(env, "sort of a Type level"));
        env.require_constraint(Constraint{s->sort.level, ConstraintKind::Lt, j,
                                          origin_with(env, "Type lives in a higher Type")});
        return mk_type(j);
      }
      return mk_type(env.fresh_type_level(
          origin_with(env, "sort of " + sort_name(s->sort))));
    }
    switch (s->sort.kind) {
      case Sort::Kind::Star: return mk_sort(sort_box());
      case Sort::Kind::Box: return mk_sort(sort_triangle());
      case Sort::Kind::Triangle:
        fail(ErrorKind::RuleViolation, "Triangle has no type in profile " + prof.name);
      default:
        fail(ErrorKind::RuleViolation, "sort " + sort_name(s->sort) +
                                           " is not available under profile " + prof.name);
    }
  }
  if (auto v = t->as_var()) {
    if (v->index >= ctx.size())
      fail(ErrorKind::UnboundVariable,
           "de Bruijn index " + std::to_string(v->index) + " exceeds context depth " +
               std::to_string(ctx.size()));
    return lift(ctx[ctx.size() - 1 - v->index].type, v->index + 1, 0);
  }
  if (auto c = t->as_const()) {
    const ConstInfo* info = env.lookup(c->name);
    if (!info) fail(ErrorKind::UnknownIdentifier, "unknown identifier '" + c->name + "'");
    if (info->kind == ConstInfo::Kind::Recursor) {
      const RecursorInfo* rec = env.lookup_recursor(c->name);
      if (rec && !rec->allowed) {
        const InductiveInfo* ind = env.lookup_inductive(rec->ind);
        fail(ErrorKind::EliminationRestriction,
             "recursor " + c->name + " eliminates the " +
                 (ind ? sort_name(ind->sort) : std::string("Prop")) + " inductive " +
                 rec->ind + " into " + sort_name(Sort{rec->target, 0}) +
                 ", which the elimination policy of profile " + env.profile().name +
                 " forbids");
      }
    }
    return info->type;
  }
  if (auto p = t->as_pi()) {
    Sort s1 = infer_sort(env, ctx, p->domain);
    Telescope inner = ctx;
    inner.push_back(Binder{p->hint, p->domain});
    Sort s2 = infer_sort(env, inner, p->codomain);
    return mk_sort(product_sort(env, s1, s2));
  }
  if (auto l = t->as_lam()) {
    Sort s1 = infer_sort(env, ctx, l->domain);
    Telescope inner = ctx;
    inner.push_back(Binder{l->hint, l->domain});
    TermPtr body_type = infer_type(env, inner, l->body);
    Sort s2 = infer_sort(env, inner, body_type);
    product_sort(env, s1, s2);  // the abstraction's product must be formable
    return mk_pi(l->hint, l->domain, body_type);
  }
  auto a = t->as_app();
  TermPtr fn_type = whnf(env, infer_type(env, ctx, a->fn));
  auto pi = fn_type->as_pi();
  if (!pi)
    fail(ErrorKind::TypeMismatch,
         "cannot apply a term of non-product type " + debug_string(fn_type));
  TermPtr arg_type = infer_type(env, ctx, a->arg);
  if (!convertible(env, arg_type, pi->domain, ConvMode::CumulLeftLe))
    fail(ErrorKind::TypeMismatch, "argument has type\n    " + debug_string(arg_type) +
                                      "\n  but the function expects\n    " +
                                      debug_string(pi->domain));
  return subst(pi->codomain, 0, a->arg);
}

Sort infer_sort(GlobalEnv& env, const Telescope& ctx, const TermPtr& t) {
  TermPtr ty = whnf(env, infer_type(env, ctx, t));
  if (auto s = ty->as_sort()) return s->sort;
  fail(ErrorKind::TypeMismatch,
       "a type was expected but the term has type " + debug_string(ty));
}

namespace {

void check_product_against_sort(GlobalEnv& env, const Telescope& ctx, const TermPtr& t,
                                const Sort& expected) {
  auto p = t->as_pi();
  Sort s1 = infer_sort(env, ctx, p->domain);
  Telescope inner = ctx;
  inner.push_back(Binder{p->hint, p->domain});
  if (p->codomain->as_pi()) {
    check_product_against_sort(env, inner, p->codomain, expected);
  } else {
    Sort s2 = infer_sort(env, inner, p->codomain);
    if (!sort_le(env, s2, expected))
      fail(ErrorKind::TypeMismatch, "product codomain lives in " + sort_name(s2) +
                                        " which does not fit in " + sort_name(expected));
  }
  const Profile& prof = env.profile();
  if (prof.is_cic()) {
    Sort would = product_sort(env, s1, expected);
    if (!sort_le(env, would, expected))
      fail(ErrorKind::RuleViolation,
           "no product rule (" + sort_name(s1) + ", " + sort_name(expected) +
               "): the sort " + sort_name(expected) +
               " is not impredicative under profile " + prof.name);
  } else {
    auto r = prof.rule_for(s1.kind, expected.kind);
    if (!r || *r != expected.kind)
      fail(ErrorKind::RuleViolation, "no product rule (" + sort_name(s1) + ", " +
                                         sort_name(expected) + ") in profile " +
                                         prof.name);
  }
}

}  // namespace

void check_type(GlobalEnv& env, const Telescope& ctx, const TermPtr& t,
                const TermPtr& expected) {
  TermPtr wexp = whnf(env, expected);
  if (auto se = wexp->as_sort()) {
    if (t->as_pi()) {
      check_product_against_sort(env, ctx, t, se->sort);
      return;
    }
  }
  TermPtr actual = infer_type(env, ctx, t);
  if (!convertible(env, actual, expected, ConvMode::CumulLeftLe))
    fail(ErrorKind::TypeMismatch, "the term has type\n    " + debug_string(actual) +
                                      "\n  but is expected to have type\n    " +
                                      debug_string(expected));
}

void declare_definition(GlobalEnv& env, const std::string& name, TermPtr type_opt,
                        TermPtr body, bool opaque) {
  if (env.has_name(name)) fail(ErrorKind::DuplicateName, "name '" + name + "' is already declared");
  TermPtr type = type_opt;
  if (type) {
    infer_sort(env, {}, type);
    check_type(env, {}, body, type);
  } else {
    type = infer_type(env, {}, body);
  }
  ConstInfo info;
  info.kind = ConstInfo::Kind::Definition;
  info.type = type;
  info.body = body;
  info.opaque = opaque;
  env.add_const(name, std::move(info));
  if (env.in_section()) env.sections().back().consts.push_back(name);
}

void declare_variable(GlobalEnv& env, const std::string& name, TermPtr type,
                      BinderKind kind) {
  if (env.has_name(name)) fail(ErrorKind::DuplicateName, "name '" + name + "' is already declared");
  infer_sort(env, {}, type);
  ConstInfo info;
  info.type = type;
  if (kind == BinderKind::Axiom) {
    if (env.in_section())
      fail(ErrorKind::RuleViolation, "Axiom is a top-level command; use Variable or "
                                     "Hypothesis inside a section");
    info.kind = ConstInfo::Kind::Axiom;
    env.add_const(name, std::move(info));
    return;
  }
  if (!env.in_section())
    fail(ErrorKind::NoOpenSection, "Variable/Hypothesis requires an open section");
  info.kind = ConstInfo::Kind::SectionVar;
  info.is_hypothesis = kind == BinderKind::Hypothesis;
  env.add_const(name, std::move(info));
  env.sections().back().vars.push_back(name);
}

void begin_section(GlobalEnv& env, const std::string& name) {
  env.sections().push_back(SectionFrame{name, {}, {}});
}

namespace {

// Replaces section-variable references by de Bruijn indices into the new
// abstraction, and in-frame constant references by that constant applied to
// the variables it was discharged over.
TermPtr discharge_rewrite(
    const TermPtr& t, const std::vector<std::string>& ordered,
    const std::unordered_map<std::string, std::vector<std::string>>& used_of_const,
    std::size_t depth) {
  if (auto c = t->as_const()) {
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (ordered[i] == c->name) return mk_var(depth + ordered.size() - 1 - i);
    }
    auto it = used_of_const.find(c->name);
    if (it != used_of_const.end() && !it->second.empty()) {
      TermPtr acc = t;
      for (const auto& v : it->second) {
        std::size_t pos = 0;
        while (pos < ordered.size() && ordered[pos] != v) ++pos;
        acc = mk_app(acc, mk_var(depth + ordered.size() - 1 - pos));
      }
      return acc;
    }
    return t;
  }
  if (auto p = t->as_pi())
    return mk_pi(p->hint, discharge_rewrite(p->domain, ordered, used_of_const, depth),
                 discharge_rewrite(p->codomain, ordered, used_of_const, depth + 1));
  if (auto l = t->as_lam())
    return mk_lam(l->hint, discharge_rewrite(l->domain, ordered, used_of_const, depth),
                  discharge_rewrite(l->body, ordered, used_of_const, depth + 1));
  if (auto a = t->as_app())
    return mk_app(discharge_rewrite(a->fn, ordered, used_of_const, depth),
                  discharge_rewrite(a->arg, ordered, used_of_const, depth));
  return t;
}

}  // namespace

void end_section(GlobalEnv& env, const std::string& name) {
  if (!env.in_section()) fail(ErrorKind::NoOpenSection, "End without an open section");
  SectionFrame frame = env.sections().back();
  if (frame.name != name)
    fail(ErrorKind::NoOpenSection,
         "End " + name + " does not match the open section " + frame.name);

  std::unordered_set<std::string> varset(frame.vars.begin(), frame.vars.end());
  std::unordered_map<std::string, std::vector<std::string>> used_of_const;

  struct NewEntry {
    std::string name;
    ConstInfo info;
  };
  std::vector<NewEntry> discharged;

  for (const auto& cname : frame.consts) {
    const ConstInfo* ci = env.lookup(cname);
    // Transitively used section variables, including through the types of
    // the variables themselves and through earlier in-frame constants.
    std::unordered_set<std::string> needed;
    std::function<void(const TermPtr&)> scan = [&](const TermPtr& t) {
      if (auto c = t->as_const()) {
        if (varset.count(c->name)) {
          if (needed.insert(c->name).second) scan(env.lookup(c->name)->type);
          return;
        }
        auto it = used_of_const.find(c->name);
        if (it != used_of_const.end()) {
          for (const auto& v : it->second) {
            if (needed.insert(v).second) scan(env.lookup(v)->type);
          }
        }
        return;
      }
      if (auto p = t->as_pi()) {
        scan(p->domain);
        scan(p->codomain);
      } else if (auto l = t->as_lam()) {
        scan(l->domain);
        scan(l->body);
      } else if (auto a = t->as_app()) {
        scan(a->fn);
        scan(a->arg);
      }
    };
    scan(ci->type);
    if (ci->body) scan(ci->body);

    std::vector<std::string> ordered;
    for (const auto& v : frame.vars) {
      if (needed.count(v)) ordered.push_back(v);
    }
    used_of_const[cname] = ordered;

    TermPtr ntype = discharge_rewrite(ci->type, ordered, used_of_const, 0);
    TermPtr nbody = ci->body ? discharge_rewrite(ci->body, ordered, used_of_const, 0)
                             : nullptr;
    for (std::size_t i = ordered.size(); i-- > 0;) {
      std::vector<std::string> prefix(ordered.begin(), ordered.begin() + i);
      TermPtr vtype =
          discharge_rewrite(env.lookup(ordered[i])->type, prefix, used_of_const, 0);
      ntype = mk_pi(ordered[i], vtype, ntype);
      if (nbody) nbody = mk_lam(ordered[i], vtype, nbody);
    }
    ConstInfo ninfo = *ci;
    ninfo.type = ntype;
    ninfo.body = nbody;
    discharged.push_back(NewEntry{cname, std::move(ninfo)});
  }

  env.sections().pop_back();
  for (const auto& v : frame.vars) env.remove_const(v);
  for (auto& e : discharged) env.replace_const(e.name, e.info);

  // Discharge correctness: every discharged term re-checks in the outer env.
  for (const auto& e : discharged) {
    if (e.info.body)
      check_type(env, {}, e.info.body, e.info.type);
    else
      infer_sort(env, {}, e.info.type);
  }

  if (env.in_section()) {
    auto& parent = env.sections().back().consts;
    for (const auto& e : discharged) parent.push_back(e.name);
  }
}

// ---------------------------------------------------------------------------
// Inductive declarations

namespace {

// Converts occurrences of the named placeholder constant into a bound
// variable; used to assemble recursor types from instantiated pieces.
TermPtr abstract_const(const TermPtr& t, const std::string& name, std::size_t depth) {
  if (auto c = t->as_const()) return c->name == name ? mk_var(depth) : t;
  if (auto p = t->as_pi())
    return mk_pi(p->hint, abstract_const(p->domain, name, depth),
                 abstract_const(p->codomain, name, depth + 1));
  if (auto l = t->as_lam())
    return mk_lam(l->hint, abstract_const(l->domain, name, depth),
                  abstract_const(l->body, name, depth + 1));
  if (auto a = t->as_app())
    return mk_app(abstract_const(a->fn, name, depth),
                  abstract_const(a->arg, name, depth));
  return t;
}

TermPtr pi_abs(const std::string& placeholder, const std::string& hint, TermPtr domain,
               TermPtr body) {
  return mk_pi(hint, std::move(domain), abstract_const(body, placeholder, 0));
}

void check_strict_positivity(const GlobalEnv& env, const std::string& ind,
                             const std::string& ctor, const TermPtr& arg_type) {
  if (!occurs_const(arg_type, ind)) return;
  TermPtr cur = arg_type;
  while (true) {
    TermPtr w = whnf(env, cur);
    auto p = w->as_pi();
    if (!p) {
      cur = w;
      break;
    }
    if (occurs_const(p->domain, ind))
      fail(ErrorKind::PositivityViolation,
           "constructor " + ctor + ": " + ind +
               " occurs to the left of an arrow in an argument type");
    cur = p->codomain;
  }
  Spine s = collect_spine(cur);
  auto head = s.head->as_const();
  if (!head || head->name != ind)
    fail(ErrorKind::PositivityViolation,
         "constructor " + ctor + ": " + ind +
             " occurs as an argument of another type former");
  for (const auto& a : s.args) {
    if (occurs_const(a, ind))
      fail(ErrorKind::PositivityViolation,
           "constructor " + ctor + ": " + ind + " occurs inside an argument of itself");
  }
}

struct CtorShape {
  std::vector<Binder> args;        // syntactic telescope
  std::vector<bool> recursive;
  std::vector<TermPtr> head_args;  // arguments of the final inductive head
};

CtorShape analyze_ctor(const GlobalEnv& env, const InductiveDecl& decl,
                       const std::string& cname, const TermPtr& ctype) {
  CtorShape shape;
  TermPtr cur = ctype;
  while (true) {
    auto p = cur->as_pi();
    if (!p) {
      TermPtr w = whnf(env, cur);
      if (!w->as_pi()) {
        cur = w;
        break;
      }
      p = w->as_pi();
      cur = w;
    }
    check_strict_positivity(env, decl.name, cname, p->domain);
    bool rec = occurs_const(p->domain, decl.name);
    shape.args.push_back(Binder{p->hint, p->domain});
    shape.recursive.push_back(rec);
    cur = p->codomain;
  }
  Spine s = collect_spine(cur);
  auto head = s.head->as_const();
  if (!head || head->name != decl.name)
    fail(ErrorKind::TypeMismatch, "constructor " + cname +
                                      " must end in the inductive " + decl.name +
                                      " fully applied");
  const std::size_t n = decl.params.size();
  const std::size_t r = shape.args.size();
  if (s.args.size() < n)
    fail(ErrorKind::TypeMismatch,
         "constructor " + cname + " does not apply " + decl.name + " to its parameters");
  for (std::size_t i = 0; i < n; ++i) {
    auto v = s.args[i]->as_var();
    if (!v || v->index != r + n - 1 - i)
      fail(ErrorKind::TypeMismatch, "constructor " + cname + " must apply " +
                                        decl.name + " to the declared parameters in order");
  }
  for (std::size_t i = n; i < s.args.size(); ++i) {
    if (occurs_const(s.args[i], decl.name))
      fail(ErrorKind::PositivityViolation,
           "constructor " + cname + ": " + decl.name + " occurs in one of its own indices");
  }
  shape.head_args = s.args;
  return shape;
}

std::string ph_param(std::size_t i) { return "$p" + std::to_string(i); }
std::string ph_arg(std::size_t i) { return "$a" + std::to_string(i); }
std::string ph_index(std::size_t i) { return "$i" + std::to_string(i); }

// Substitutes the outermost `count` de Bruijn binders of `t` with the
// placeholder constants produced by `namer`.
TermPtr instantiate_placeholders(TermPtr t, std::size_t count,
                                 const std::function<std::string(std::size_t)>& namer) {
  for (std::size_t k = count; k-- > 0;) t = subst(t, 0, mk_const(namer(k)));
  return t;
}

}  // namespace

std::set<Sort::Kind> eliminator_targets(GlobalEnv& env, const InductiveInfo& ind) {
  std::set<Sort::Kind> out;
  if (!env.profile().is_cic()) return out;
  out.insert(Sort::Kind::Prop);
  if (ind.sort.kind != Sort::Kind::Prop) {
    out.insert(Sort::Kind::Set);
    out.insert(Sort::Kind::Type);
    return out;
  }
  if (!env.profile().singleton_elimination) return out;
  bool singleton = false;
  if (ind.ctor_names.empty()) {
    singleton = true;
  } else if (ind.ctor_names.size() == 1) {
    const CtorInfo* ctor = env.lookup_ctor(ind.ctor_names[0]);
    singleton = true;
    Telescope ctx = ind.params;
    for (const auto& arg : ctor->args) {
      Sort s = infer_sort(env, ctx, arg.type);
      if (s.kind != Sort::Kind::Prop) {
        singleton = false;
        break;
      }
      ctx.push_back(Binder{"_", arg.type});
    }
  }
  if (singleton) {
    out.insert(Sort::Kind::Set);
    out.insert(Sort::Kind::Type);
  }
  return out;
}

void declare_inductive(GlobalEnv& env, const InductiveDecl& decl) {
  if (env.in_section())
    fail(ErrorKind::RuleViolation,
         "inductive declarations are not supported inside sections; declare the "
         "inductive before the section with explicit parameters");
  if (!env.profile().is_cic())
    fail(ErrorKind::RuleViolation,
         "profile " + env.profile().name + " is a pure type system without inductives");
  if (env.has_name(decl.name))
    fail(ErrorKind::DuplicateName, "name '" + decl.name + "' is already declared");
  for (const auto& [cname, ctype] : decl.ctors) {
    (void)ctype;
    if (env.has_name(cname) || cname == decl.name)
      fail(ErrorKind::DuplicateName, "name '" + cname + "' is already declared");
  }

  // Parameter telescope and arity.
  Telescope param_ctx;
  for (const auto& b : decl.params) {
    infer_sort(env, param_ctx, b.type);
    param_ctx.push_back(b);
  }
  infer_sort(env, param_ctx, decl.arity);
  std::vector<Binder> index_binders;
  TermPtr arity_tail = decl.arity;
  while (true) {
    TermPtr w = whnf(env, arity_tail);
    if (auto p = w->as_pi()) {
      index_binders.push_back(Binder{p->hint, p->domain});
      arity_tail = p->codomain;
      continue;
    }
    arity_tail = w;
    break;
  }
  auto arity_sort = arity_tail->as_sort();
  if (!arity_sort)
    fail(ErrorKind::TypeMismatch, "the arity of " + decl.name + " must end in a sort");
  Sort ind_sort = arity_sort->sort;

  TermPtr full_arity = decl.arity;
  for (std::size_t i = decl.params.size(); i-- > 0;)
    full_arity = mk_pi(decl.params[i].hint, decl.params[i].type, full_arity);

  ConstInfo ind_const;
  ind_const.kind = ConstInfo::Kind::Inductive;
  ind_const.type = full_arity;
  env.add_const(decl.name, std::move(ind_const));

  const std::size_t n_params = decl.params.size();
  const std::size_t n_indices = index_binders.size();

  // Universe constraints for stored data: a constructor argument that is
  // itself a sort forces a strict bound; other arguments bound the level
  // from below.  Prop and impredicative Set absorb everything.
  auto constrain_stored = [&](const Telescope& ctx, const TermPtr& arg_type) {
    bool strict_target = ind_sort.kind == Sort::Kind::Type ||
                         (ind_sort.kind == Sort::Kind::Set &&
                          !env.profile().impredicative_set);
    if (!strict_target) return;
    LevelId target = level_of(ind_sort);
    TermPtr w = whnf(env, arg_type);
    if (auto s = w->as_sort()) {
      env.require_constraint(Constraint{
          level_of(s->sort), ConstraintKind::Lt, target,
          origin_with(env, "constructor of " + decl.name + " stores a type, which must "
                           "live strictly below the inductive")});
      return;
    }
    Sort s = infer_sort(env, ctx, arg_type);
    if (s.kind == Sort::Kind::Type || s.kind == Sort::Kind::Set) {
      env.require_constraint(Constraint{
          level_of(s), ConstraintKind::Le, target,
          origin_with(env, "constructor argument of " + decl.name +
                           " must fit in the inductive's level")});
    }
  };

  std::vector<CtorShape> shapes;
  for (const auto& [cname, ctype] : decl.ctors) {
    infer_sort(env, param_ctx, ctype);
    CtorShape shape = analyze_ctor(env, decl, cname, ctype);
    Telescope ctx = param_ctx;
    for (const auto& arg : shape.args) {
      constrain_stored(ctx, arg.type);
      ctx.push_back(arg);
    }
    shapes.push_back(std::move(shape));
  }
  {
    Telescope ctx = param_ctx;
    for (const auto& idx : index_binders) {
      constrain_stored(ctx, idx.type);
      ctx.push_back(idx);
    }
  }

  InductiveInfo info;
  info.name = decl.name;
  info.params = decl.params;
  info.n_params = n_params;
  info.n_indices = n_indices;
  info.full_arity = full_arity;
  info.sort = ind_sort;

  for (std::size_t k = 0; k < decl.ctors.size(); ++k) {
    const auto& [cname, ctype] = decl.ctors[k];
    TermPtr full = ctype;
    for (std::size_t i = n_params; i-- > 0;)
      full = mk_pi(decl.params[i].hint, decl.params[i].type, full);
    ConstInfo cinfo;
    cinfo.kind = ConstInfo::Kind::Constructor;
    cinfo.type = full;
    cinfo.ind = decl.name;
    cinfo.ctor_index = k;
    env.add_const(cname, std::move(cinfo));

    CtorInfo cmeta;
    cmeta.name = cname;
    cmeta.full_type = full;
    for (std::size_t j = 0; j < shapes[k].args.size(); ++j)
      cmeta.args.push_back(CtorArg{shapes[k].args[j].type, shapes[k].recursive[j]});
    env.add_ctor_meta(cname, std::move(cmeta));
    info.ctor_names.push_back(cname);
  }

  env.add_inductive_meta(decl.name, info);
  std::set<Sort::Kind> targets = eliminator_targets(env, info);

  // Recursor types are assembled with placeholder constants, then the
  // placeholders are abstracted into binders from the inside out.
  std::vector<TermPtr> param_types;
  for (std::size_t i = 0; i < n_params; ++i)
    param_types.push_back(instantiate_placeholders(decl.params[i].type, i, ph_param));

  TermPtr arity_inst = instantiate_placeholders(decl.arity, n_params, ph_param);
  std::vector<TermPtr> index_types;
  {
    TermPtr cur = arity_inst;
    for (std::size_t l = 0; l < n_indices; ++l) {
      TermPtr w = whnf(env, cur);
      auto p = w->as_pi();
      index_types.push_back(p->domain);
      cur = subst(p->codomain, 0, mk_const(ph_index(l)));
    }
  }

  auto ind_applied = [&](const std::vector<TermPtr>& extra) {
    TermPtr acc = mk_const(decl.name);
    for (std::size_t i = 0; i < n_params; ++i) acc = mk_app(acc, mk_const(ph_param(i)));
    for (const auto& e : extra) acc = mk_app(acc, e);
    return acc;
  };

  for (Sort::Kind target : {Sort::Kind::Prop, Sort::Kind::Set, Sort::Kind::Type}) {
    Sort target_sort{target, 0};
    if (target == Sort::Kind::Type)
      target_sort.level = env.fresh_type_level(
          origin_with(env, "motive level of " + recursor_name(decl.name, target)));

    // Motive: forall indices, I params indices -> target.
    std::vector<TermPtr> idx_refs;
    for (std::size_t l = 0; l < n_indices; ++l)
      idx_refs.push_back(mk_const(ph_index(l)));
    TermPtr motive = mk_arrow(ind_applied(idx_refs), mk_sort(target_sort));
    for (std::size_t l = n_indices; l-- > 0;)
      motive = pi_abs(ph_index(l), index_binders[l].hint, index_types[l], motive);

    // Branches.
    std::vector<TermPtr> branches;
    for (std::size_t k = 0; k < decl.ctors.size(); ++k) {
      const auto& [cname, ctype_raw] = decl.ctors[k];
      TermPtr cur = instantiate_placeholders(ctype_raw, n_params, ph_param);
      struct Part {
        std::string placeholder;  // empty = anonymous induction hypothesis
        std::string hint;
        TermPtr type;
      };
      std::vector<Part> parts;
      for (std::size_t j = 0; j < shapes[k].args.size(); ++j) {
        TermPtr w = cur->as_pi() ? cur : whnf(env, cur);
        auto p = w->as_pi();
        TermPtr arg_type = p->domain;
        parts.push_back(Part{ph_arg(j), p->hint, arg_type});
        if (shapes[k].recursive[j]) {
          // fun-less IH: forall ys, Q us (a ys)
          std::vector<Binder> tele;
          TermPtr inner = arg_type;
          while (true) {
            TermPtr iw = inner->as_pi() ? inner : whnf(env, inner);
            auto ip = iw->as_pi();
            if (!ip) {
              inner = iw;
              break;
            }
            tele.push_back(Binder{ip->hint, ip->domain});
            inner = ip->codomain;
          }
          Spine hs = collect_spine(inner);
          TermPtr applied = mk_const(ph_arg(j));
          for (std::size_t l = 0; l < tele.size(); ++l)
            applied = mk_app(applied, mk_var(tele.size() - 1 - l));
          TermPtr ih = mk_const("$Q");
          for (std::size_t l = n_params; l < hs.args.size(); ++l)
            ih = mk_app(ih, hs.args[l]);
          ih = mk_app(ih, applied);
          for (std::size_t l = tele.size(); l-- > 0;)
            ih = mk_pi(tele[l].hint, tele[l].type, ih);
          parts.push_back(Part{"", p->hint + "_ih", ih});
        }
        cur = subst(p->codomain, 0, mk_const(ph_arg(j)));
      }
      Spine head = collect_spine(cur);
      TermPtr ctor_applied = mk_const(cname);
      for (std::size_t i = 0; i < n_params; ++i)
        ctor_applied = mk_app(ctor_applied, mk_const(ph_param(i)));
      for (std::size_t j = 0; j < shapes[k].args.size(); ++j)
        ctor_applied = mk_app(ctor_applied, mk_const(ph_arg(j)));
      TermPtr concl = mk_const("$Q");
      for (std::size_t l = n_params; l < head.args.size(); ++l)
        concl = mk_app(concl, head.args[l]);
      concl = mk_app(concl, ctor_applied);
      for (std::size_t j = parts.size(); j-- > 0;) {
        if (parts[j].placeholder.empty())
          concl = mk_arrow(parts[j].type, concl);
        else
          concl = pi_abs(parts[j].placeholder, parts[j].hint, parts[j].type, concl);
      }
      branches.push_back(concl);
    }

    // rec : forall params Q branches indices (x : I params indices), Q indices x
    TermPtr tail = mk_const("$Q");
    for (std::size_t l = 0; l < n_indices; ++l) tail = mk_app(tail, mk_const(ph_index(l)));
    tail = mk_app(tail, mk_const("$x"));
    tail = pi_abs("$x", "x", ind_applied(idx_refs), tail);
    for (std::size_t l = n_indices; l-- > 0;)
      tail = pi_abs(ph_index(l), index_binders[l].hint, index_types[l], tail);
    for (std::size_t k = branches.size(); k-- > 0;)
      tail = pi_abs("$f" + std::to_string(k), "f", branches[k], tail);
    tail = pi_abs("$Q", "Q", motive, tail);
    for (std::size_t i = n_params; i-- > 0;)
      tail = pi_abs(ph_param(i), decl.params[i].hint, param_types[i], tail);

    infer_sort(env, {}, tail);  // the generated recursor type must be well-formed

    std::string rname = recursor_name(decl.name, target);
    ConstInfo rconst;
    rconst.kind = ConstInfo::Kind::Recursor;
    rconst.type = tail;
    rconst.ind = decl.name;
    env.add_const(rname, std::move(rconst));

    RecursorInfo rinfo;
    rinfo.ind = decl.name;
    rinfo.target = target;
    rinfo.allowed = targets.count(target) > 0;
    rinfo.type = tail;
    rinfo.n_params = n_params;
    rinfo.n_branches = decl.ctors.size();
    rinfo.n_indices = n_indices;
    env.add_recursor_meta(rname, rinfo);
    info.recursor_names.push_back(rname);
  }
  env.add_inductive_meta(decl.name, info);  // refresh with recursor names
}

}  // namespace pdx
