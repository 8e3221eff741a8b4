#include "pdx/reduce.hpp"

#include <algorithm>
#include <unordered_set>

namespace pdx {

namespace {

// A transparent definition body the reducer may unfold.
const TermPtr* unfoldable_body(const GlobalEnv& env, const std::string& name) {
  const ConstInfo* info = env.lookup(name);
  if (!info || info->kind != ConstInfo::Kind::Definition || info->opaque || !info->body)
    return nullptr;
  return &info->body;
}

TermPtr rebuild(TermPtr head, const std::vector<TermPtr>& args, std::size_t from) {
  TermPtr acc = std::move(head);
  for (std::size_t i = from; i < args.size(); ++i) acc = mk_app(acc, args[i]);
  return acc;
}

// Instantiate the recursive-argument type, strip its Pi telescope, and build
// the induction-hypothesis lambda  fun ys => rec params Q branches idx (a ys).
TermPtr build_ih(const GlobalEnv& env, const RecursorInfo& rec,
                 const std::vector<TermPtr>& rec_prefix, TermPtr arg_type_inst,
                 const TermPtr& arg_value) {
  std::vector<TermPtr> telescope;  // domains, outermost first
  std::vector<std::string> hints;
  TermPtr cur = std::move(arg_type_inst);
  while (true) {
    TermPtr w = whnf(env, cur);
    auto pi = w->as_pi();
    if (!pi) {
      cur = w;
      break;
    }
    telescope.push_back(pi->domain);
    hints.push_back(pi->hint);
    cur = pi->codomain;
  }
  const std::size_t q = telescope.size();
  Spine head = collect_spine(cur);  // I params... indices...
  std::vector<TermPtr> call_args;
  for (const auto& p : rec_prefix) call_args.push_back(lift(p, q, 0));
  for (std::size_t i = rec.n_params; i < head.args.size(); ++i)
    call_args.push_back(head.args[i]);  // indices, already in telescope scope
  TermPtr applied_arg = lift(arg_value, q, 0);
  for (std::size_t i = 0; i < q; ++i)
    applied_arg = mk_app(applied_arg, mk_var(q - 1 - i));
  call_args.push_back(applied_arg);
  TermPtr call = mk_app(mk_const(recursor_name(rec.ind, rec.target)), call_args);
  for (std::size_t i = q; i-- > 0;) call = mk_lam(hints[i], telescope[i], call);
  return call;
}

// One iota contraction:  rec p.. Q f.. i.. (c p.. a..)  ~>  f_k a.. ih..  .
// Returns nullptr when the major argument is not constructor-headed.  The
// small-step engine passes whnf_major = false and relies on leftmost
// reduction to expose the constructor instead.
TermPtr try_iota(const GlobalEnv& env, const RecursorInfo& rec,
                 const std::vector<TermPtr>& args, bool whnf_major) {
  const std::size_t prefix = rec.n_params + 1 + rec.n_branches + rec.n_indices;
  if (args.size() < prefix + 1) return nullptr;
  TermPtr major = whnf_major ? whnf(env, args[prefix]) : args[prefix];
  Spine mspine = collect_spine(major);
  auto head_const = mspine.head->as_const();
  if (!head_const) return nullptr;
  const ConstInfo* hinfo = env.lookup(head_const->name);
  if (!hinfo || hinfo->kind != ConstInfo::Kind::Constructor || hinfo->ind != rec.ind)
    return nullptr;
  const CtorInfo* ctor = env.lookup_ctor(head_const->name);
  if (!ctor || mspine.args.size() != rec.n_params + ctor->args.size()) return nullptr;

  std::vector<TermPtr> rec_prefix(args.begin(), args.begin() + rec.n_params + 1 +
                                                    rec.n_branches);
  TermPtr branch = args[rec.n_params + 1 + hinfo->ctor_index];
  std::vector<TermPtr> ctor_args(mspine.args.begin() + rec.n_params, mspine.args.end());

  TermPtr result = branch;
  for (std::size_t j = 0; j < ctor_args.size(); ++j) {
    result = mk_app(result, ctor_args[j]);
    if (ctor->args[j].recursive) {
      // Instantiate the stored arg type (context: params + earlier args).
      TermPtr ty = ctor->args[j].type;
      for (std::size_t k = j; k-- > 0;) ty = subst(ty, 0, ctor_args[k]);
      for (std::size_t k = rec.n_params; k-- > 0;) ty = subst(ty, 0, mspine.args[k]);
      result = mk_app(result, build_ih(env, rec, rec_prefix, ty, ctor_args[j]));
    }
  }
  return result;
}

}  // namespace

TermPtr whnf(const GlobalEnv& env, const TermPtr& t) {
  TermPtr head = t;
  std::vector<TermPtr> args;  // reversed: back() is the innermost argument
  while (true) {
    if (auto a = head->as_app()) {
      args.push_back(a->arg);
      head = a->fn;
      continue;
    }
    if (auto l = head->as_lam()) {
      if (!args.empty()) {
        head = subst(l->body, 0, args.back());
        args.pop_back();
        continue;
      }
      break;
    }
    if (auto c = head->as_const()) {
      if (auto body = unfoldable_body(env, c->name)) {
        head = *body;
        continue;
      }
      if (const RecursorInfo* rec = env.lookup_recursor(c->name)) {
        std::vector<TermPtr> fwd(args.rbegin(), args.rend());
        if (TermPtr contracted = try_iota(env, *rec, fwd, true)) {
          const std::size_t used = rec->n_params + 1 + rec->n_branches +
                                   rec->n_indices + 1;
          head = contracted;
          args.erase(args.end() - used, args.end());
          continue;
        }
      }
      break;
    }
    break;  // Sort, Var, Pi, or unapplied binder
  }
  TermPtr acc = head;
  for (auto it = args.rbegin(); it != args.rend(); ++it) acc = mk_app(acc, *it);
  return acc;
}

namespace {

struct StepOutcome {
  TermPtr term;
  StepKind kind;
  std::string head;
};

// Leftmost-outermost single step.  `normal` caches subterms known to contain
// no redex for this environment, pruning the rescans between steps.
std::optional<StepOutcome> step(const GlobalEnv& env, const TermPtr& t,
                                std::unordered_set<TermPtr>& normal) {
  if (normal.count(t)) return std::nullopt;

  Spine spine = collect_spine(t);
  if (!spine.args.empty()) {
    if (auto l = spine.head->as_lam()) {
      TermPtr reduced = subst(l->body, 0, spine.args[0]);
      return StepOutcome{rebuild(reduced, spine.args, 1), StepKind::Beta, ""};
    }
    if (auto c = spine.head->as_const()) {
      if (const RecursorInfo* rec = env.lookup_recursor(c->name)) {
        if (TermPtr contracted = try_iota(env, *rec, spine.args, false)) {
          const std::size_t used = rec->n_params + 1 + rec->n_branches +
                                   rec->n_indices + 1;
          return StepOutcome{rebuild(contracted, spine.args, used), StepKind::Iota,
                             c->name};
        }
      }
    }
  }
  if (auto c = t->as_const()) {
    if (auto body = unfoldable_body(env, c->name))
      return StepOutcome{*body, StepKind::Delta, c->name};
  }
  if (auto a = t->as_app()) {
    if (auto s = step(env, a->fn, normal))
      return StepOutcome{mk_app(s->term, a->arg), s->kind, s->head};
    if (auto s = step(env, a->arg, normal))
      return StepOutcome{mk_app(a->fn, s->term), s->kind, s->head};
  } else if (auto l = t->as_lam()) {
    if (auto s = step(env, l->domain, normal))
      return StepOutcome{mk_lam(l->hint, s->term, l->body), s->kind, s->head};
    if (auto s = step(env, l->body, normal))
      return StepOutcome{mk_lam(l->hint, l->domain, s->term), s->kind, s->head};
  } else if (auto p = t->as_pi()) {
    if (auto s = step(env, p->domain, normal))
      return StepOutcome{mk_pi(p->hint, s->term, p->codomain), s->kind, s->head};
    if (auto s = step(env, p->codomain, normal))
      return StepOutcome{mk_pi(p->hint, p->domain, s->term), s->kind, s->head};
  }
  normal.insert(t);
  return std::nullopt;
}

}  // namespace

NormalizationResult normalize(
    const GlobalEnv& env, const TermPtr& t, std::uint64_t fuel,
    const std::function<void(std::uint64_t, StepKind, const std::string&)>& trace) {
  // Owning memo of subterms known normal: keeps their addresses from being
  // reused while the set is alive.
  std::unordered_set<TermPtr> normal;
  TermPtr cur = t;
  std::uint64_t steps = 0;
  while (steps < fuel) {
    auto s = step(env, cur, normal);
    if (!s) return NormalizationResult{true, cur, steps};
    cur = s->term;
    ++steps;
    if (trace) trace(steps, s->kind, s->head);
  }
  // One last scan so an exactly-on-budget normal form is reported as such.
  if (!step(env, cur, normal)) return NormalizationResult{true, cur, steps};
  return NormalizationResult{false, cur, steps};
}

namespace {

bool sort_convertible(GlobalEnv& env, const Sort& a, const Sort& b, ConvMode mode) {
  auto le_level = [&](LevelId x, LevelId y) {
    env.require_constraint(Constraint{x, ConstraintKind::Le, y, env.current_origin});
  };
  if (mode == ConvMode::Conv) {
    if (a.kind != b.kind) return false;
    if (a.kind == Sort::Kind::Type && a.level != b.level) {
      env.require_constraint(
          Constraint{a.level, ConstraintKind::Eq, b.level, env.current_origin});
    }
    return true;
  }
  // CumulLeftLe: Prop <= Set <= Type l, levels via Le.
  if (a == b) return true;
  if (!env.profile().is_cic() || !env.profile().cumulativity)
    return a.kind == b.kind &&
           (a.kind != Sort::Kind::Type || (le_level(a.level, b.level), true));
  switch (a.kind) {
    case Sort::Kind::Prop:
      if (b.kind == Sort::Kind::Set) return true;
      if (b.kind == Sort::Kind::Type) {
        le_level(kLevelProp, b.level);
        return true;
      }
      return false;
    case Sort::Kind::Set:
      if (b.kind == Sort::Kind::Type) {
        le_level(kLevelSet, b.level);
        return true;
      }
      return false;
    case Sort::Kind::Type:
      if (b.kind == Sort::Kind::Type) {
        le_level(a.level, b.level);
        return true;
      }
      return false;
    default:
      return false;
  }
}

bool conv(GlobalEnv& env, const TermPtr& t, const TermPtr& u, ConvMode mode);

bool conv_spines(GlobalEnv& env, const Spine& a, const Spine& b) {
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!conv(env, a.args[i], b.args[i], ConvMode::Conv)) return false;
  }
  return true;
}

bool conv(GlobalEnv& env, const TermPtr& t, const TermPtr& u, ConvMode mode) {
  if (syntactic_eq(t, u)) return true;
  TermPtr wt = whnf(env, t);
  TermPtr wu = whnf(env, u);
  if (auto st = wt->as_sort()) {
    auto su = wu->as_sort();
    return su && sort_convertible(env, st->sort, su->sort, mode);
  }
  if (auto pt = wt->as_pi()) {
    auto pu = wu->as_pi();
    // Domains compare with strict Conv; cumulativity descends on the right.
    return pu && conv(env, pt->domain, pu->domain, ConvMode::Conv) &&
           conv(env, pt->codomain, pu->codomain, mode);
  }
  if (auto lt = wt->as_lam()) {
    auto lu = wu->as_lam();
    return lu && conv(env, lt->domain, lu->domain, ConvMode::Conv) &&
           conv(env, lt->body, lu->body, ConvMode::Conv);
  }
  Spine st = collect_spine(wt);
  Spine su = collect_spine(wu);
  if (auto vt = st.head->as_var()) {
    auto vu = su.head->as_var();
    return vu && vt->index == vu->index && conv_spines(env, st, su);
  }
  if (auto ct = st.head->as_const()) {
    auto cu = su.head->as_const();
    return cu && ct->name == cu->name && conv_spines(env, st, su);
  }
  return false;
}

}  // namespace

bool convertible(GlobalEnv& env, const TermPtr& t, const TermPtr& u, ConvMode mode) {
  return conv(env, t, u, mode);
}

}  // namespace pdx
