#include "pdx/term.hpp"

#include <algorithm>
#include <sstream>

namespace pdx {

Sort sort_prop() { return Sort{Sort::Kind::Prop, 0}; }
Sort sort_set() { return Sort{Sort::Kind::Set, 0}; }
Sort sort_type(LevelId level) { return Sort{Sort::Kind::Type, level}; }
Sort sort_star() { return Sort{Sort::Kind::Star, 0}; }
Sort sort_box() { return Sort{Sort::Kind::Box, 0}; }
Sort sort_triangle() { return Sort{Sort::Kind::Triangle, 0}; }

std::string sort_name(const Sort& s) {
  switch (s.kind) {
    case Sort::Kind::Prop: return "Prop";
    case Sort::Kind::Set: return "Set";
    case Sort::Kind::Type: return "Type";
    case Sort::Kind::Star: return "Star";
    case Sort::Kind::Box: return "Box";
    case Sort::Kind::Triangle: return "Triangle";
  }
  return "?";
}

namespace {

TermPtr make(Term::SortRef n) {
  auto t = std::make_shared<Term>();
  t->node = std::move(n);
  t->fv_bound = 0;
  return t;
}

TermPtr make(Term::Var n) {
  auto t = std::make_shared<Term>();
  t->fv_bound = n.index + 1;
  t->node = std::move(n);
  return t;
}

TermPtr make(Term::ConstRef n) {
  auto t = std::make_shared<Term>();
  t->node = std::move(n);
  t->fv_bound = 0;
  return t;
}

TermPtr make(Term::Pi n) {
  auto t = std::make_shared<Term>();
  std::size_t body = n.codomain->fv_bound;
  t->fv_bound = std::max(n.domain->fv_bound, body > 0 ? body - 1 : 0);
  t->node = std::move(n);
  return t;
}

TermPtr make(Term::Lam n) {
  auto t = std::make_shared<Term>();
  std::size_t body = n.body->fv_bound;
  t->fv_bound = std::max(n.domain->fv_bound, body > 0 ? body - 1 : 0);
  t->node = std::move(n);
  return t;
}

TermPtr make(Term::App n) {
  auto t = std::make_shared<Term>();
  t->fv_bound = std::max(n.fn->fv_bound, n.arg->fv_bound);
  t->node = std::move(n);
  return t;
}

}  // namespace

TermPtr mk_sort(Sort s) { return make(Term::SortRef{s}); }
TermPtr mk_prop() { return mk_sort(sort_prop()); }
TermPtr mk_set() { return mk_sort(sort_set()); }
TermPtr mk_type(LevelId level) { return mk_sort(sort_type(level)); }
TermPtr mk_var(std::size_t index) { return make(Term::Var{index}); }
TermPtr mk_const(std::string name) { return make(Term::ConstRef{std::move(name)}); }

TermPtr mk_pi(std::string hint, TermPtr domain, TermPtr codomain) {
  return make(Term::Pi{std::move(hint), std::move(domain), std::move(codomain)});
}

TermPtr mk_lam(std::string hint, TermPtr domain, TermPtr body) {
  return make(Term::Lam{std::move(hint), std::move(domain), std::move(body)});
}

TermPtr mk_app(TermPtr fn, TermPtr arg) {
  return make(Term::App{std::move(fn), std::move(arg)});
}

TermPtr mk_app(TermPtr fn, const std::vector<TermPtr>& args) {
  TermPtr acc = std::move(fn);
  for (const auto& a : args) acc = mk_app(acc, a);
  return acc;
}

TermPtr mk_arrow(TermPtr domain, TermPtr codomain) {
  return mk_pi("_", std::move(domain), lift(codomain, 1, 0));
}

TermPtr lift(const TermPtr& t, std::size_t amount, std::size_t cutoff) {
  if (amount == 0 || t->fv_bound <= cutoff) return t;
  if (auto v = t->as_var()) {
    return v->index >= cutoff ? mk_var(v->index + amount) : t;
  }
  if (auto p = t->as_pi()) {
    return mk_pi(p->hint, lift(p->domain, amount, cutoff),
                 lift(p->codomain, amount, cutoff + 1));
  }
  if (auto l = t->as_lam()) {
    return mk_lam(l->hint, lift(l->domain, amount, cutoff),
                  lift(l->body, amount, cutoff + 1));
  }
  if (auto a = t->as_app()) {
    return mk_app(lift(a->fn, amount, cutoff), lift(a->arg, amount, cutoff));
  }
  return t;  // SortRef / ConstRef have fv_bound 0
}

TermPtr subst(const TermPtr& t, std::size_t target, const TermPtr& replacement) {
  if (t->fv_bound <= target) return t;
  if (auto v = t->as_var()) {
    if (v->index == target) return lift(replacement, target, 0);
    if (v->index > target) return mk_var(v->index - 1);
    return t;
  }
  if (auto p = t->as_pi()) {
    return mk_pi(p->hint, subst(p->domain, target, replacement),
                 subst(p->codomain, target + 1, replacement));
  }
  if (auto l = t->as_lam()) {
    return mk_lam(l->hint, subst(l->domain, target, replacement),
                  subst(l->body, target + 1, replacement));
  }
  if (auto a = t->as_app()) {
    return mk_app(subst(a->fn, target, replacement),
                  subst(a->arg, target, replacement));
  }
  return t;
}

bool syntactic_eq(const TermPtr& t, const TermPtr& u) {
  if (t == u) return true;
  if (t->node.index() != u->node.index()) return false;
  if (auto s = t->as_sort()) return s->sort == u->as_sort()->sort;
  if (auto v = t->as_var()) return v->index == u->as_var()->index;
  if (auto c = t->as_const()) return c->name == u->as_const()->name;
  if (auto p = t->as_pi()) {
    auto q = u->as_pi();
    return syntactic_eq(p->domain, q->domain) &&
           syntactic_eq(p->codomain, q->codomain);
  }
  if (auto l = t->as_lam()) {
    auto m = u->as_lam();
    return syntactic_eq(l->domain, m->domain) && syntactic_eq(l->body, m->body);
  }
  auto a = t->as_app();
  auto b = u->as_app();
  return syntactic_eq(a->fn, b->fn) && syntactic_eq(a->arg, b->arg);
}

Spine collect_spine(const TermPtr& t) {
  Spine s;
  TermPtr cur = t;
  while (auto a = cur->as_app()) {
    s.args.push_back(a->arg);
    cur = a->fn;
  }
  std::reverse(s.args.begin(), s.args.end());
  s.head = cur;
  return s;
}

bool occurs_const(const TermPtr& t, const std::string& name) {
  if (auto c = t->as_const()) return c->name == name;
  if (auto p = t->as_pi())
    return occurs_const(p->domain, name) || occurs_const(p->codomain, name);
  if (auto l = t->as_lam())
    return occurs_const(l->domain, name) || occurs_const(l->body, name);
  if (auto a = t->as_app())
    return occurs_const(a->fn, name) || occurs_const(a->arg, name);
  return false;
}

namespace {

void debug_render(const TermPtr& t, std::ostringstream& out) {
  if (auto s = t->as_sort()) {
    out << sort_name(s->sort);
    if (s->sort.kind == Sort::Kind::Type) out << "@" << s->sort.level;
    return;
  }
  if (auto v = t->as_var()) {
    out << "'" << v->index;
    return;
  }
  if (auto c = t->as_const()) {
    out << c->name;
    return;
  }
  if (auto p = t->as_pi()) {
    out << "(forall " << p->hint << " : ";
    debug_render(p->domain, out);
    out << ", ";
    debug_render(p->codomain, out);
    out << ")";
    return;
  }
  if (auto l = t->as_lam()) {
    out << "(fun " << l->hint << " : ";
    debug_render(l->domain, out);
    out << " => ";
    debug_render(l->body, out);
    out << ")";
    return;
  }
  auto a = t->as_app();
  out << "(";
  debug_render(a->fn, out);
  out << " ";
  debug_render(a->arg, out);
  out << ")";
}

}  // namespace

std::string debug_string(const TermPtr& t) {
  std::ostringstream out;
  debug_render(t, out);
  return out.str();
}

}  // namespace pdx
