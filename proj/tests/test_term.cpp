#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <memory>
#include <random>

#include "doctest.h"
#include "pdx/term.hpp"

using namespace pdx;

namespace {

// ---------------------------------------------------------------------------
// Independent named-variable oracle.  Terms carry explicit names; renaming
// and substitution are done the naive capture-avoiding way.  Conversions to
// and from de Bruijn let us cross-check lift/subst.

struct NTerm;
using NPtr = std::shared_ptr<const NTerm>;

struct NTerm {
  enum Kind { NSort, NVar, NConst, NPi, NLam, NApp } kind;
  Sort sort{};
  std::string name;  // NVar/NConst, and binder name for NPi/NLam
  NPtr a, b;
};

NPtr nmk(NTerm t) { return std::make_shared<NTerm>(std::move(t)); }
NPtr nsort(Sort s) { return nmk({NTerm::NSort, s, "", nullptr, nullptr}); }
NPtr nvar(std::string n) { return nmk({NTerm::NVar, {}, std::move(n), nullptr, nullptr}); }
NPtr nconst(std::string n) { return nmk({NTerm::NConst, {}, std::move(n), nullptr, nullptr}); }
NPtr npi(std::string n, NPtr d, NPtr c) { return nmk({NTerm::NPi, {}, std::move(n), d, c}); }
NPtr nlam(std::string n, NPtr d, NPtr c) { return nmk({NTerm::NLam, {}, std::move(n), d, c}); }
NPtr napp(NPtr f, NPtr x) { return nmk({NTerm::NApp, {}, "", f, x}); }

int fresh_counter = 0;
std::string gensym() { return "g" + std::to_string(fresh_counter++); }

// ctx: innermost name first.
NPtr to_named(const TermPtr& t, std::vector<std::string>& ctx) {
  if (auto s = t->as_sort()) return nsort(s->sort);
  if (auto v = t->as_var()) {
    REQUIRE(v->index < ctx.size());
    return nvar(ctx[v->index]);
  }
  if (auto c = t->as_const()) return nconst(c->name);
  if (auto p = t->as_pi()) {
    NPtr d = to_named(p->domain, ctx);
    std::string n = gensym();
    ctx.insert(ctx.begin(), n);
    NPtr b = to_named(p->codomain, ctx);
    ctx.erase(ctx.begin());
    return npi(n, d, b);
  }
  if (auto l = t->as_lam()) {
    NPtr d = to_named(l->domain, ctx);
    std::string n = gensym();
    ctx.insert(ctx.begin(), n);
    NPtr b = to_named(l->body, ctx);
    ctx.erase(ctx.begin());
    return nlam(n, d, b);
  }
  auto a = t->as_app();
  return napp(to_named(a->fn, ctx), to_named(a->arg, ctx));
}

TermPtr from_named(const NPtr& t, std::vector<std::string>& ctx) {
  switch (t->kind) {
    case NTerm::NSort: return mk_sort(t->sort);
    case NTerm::NVar: {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx[i] == t->name) return mk_var(i);
      }
      REQUIRE(false);
      return nullptr;
    }
    case NTerm::NConst: return mk_const(t->name);
    case NTerm::NPi: {
      TermPtr d = from_named(t->a, ctx);
      ctx.insert(ctx.begin(), t->name);
      TermPtr b = from_named(t->b, ctx);
      ctx.erase(ctx.begin());
      return mk_pi("x", d, b);
    }
    case NTerm::NLam: {
      TermPtr d = from_named(t->a, ctx);
      ctx.insert(ctx.begin(), t->name);
      TermPtr b = from_named(t->b, ctx);
      ctx.erase(ctx.begin());
      return mk_lam("x", d, b);
    }
    case NTerm::NApp:
      return mk_app(from_named(t->a, ctx), from_named(t->b, ctx));
  }
  return nullptr;
}

bool nfree(const NPtr& t, const std::string& n) {
  switch (t->kind) {
    case NTerm::NVar: return t->name == n;
    case NTerm::NSort:
    case NTerm::NConst: return false;
    case NTerm::NPi:
    case NTerm::NLam:
      return nfree(t->a, n) || (t->name != n && nfree(t->b, n));
    case NTerm::NApp: return nfree(t->a, n) || nfree(t->b, n);
  }
  return false;
}

// Naive capture-avoiding substitution: binders always renamed fresh.
NPtr nsubst(const NPtr& t, const std::string& target, const NPtr& repl) {
  switch (t->kind) {
    case NTerm::NSort:
    case NTerm::NConst: return t;
    case NTerm::NVar: return t->name == target ? repl : t;
    case NTerm::NPi:
    case NTerm::NLam: {
      NPtr d = nsubst(t->a, target, repl);
      if (t->name == target) return t->kind == NTerm::NPi ? npi(t->name, d, t->b)
                                                          : nlam(t->name, d, t->b);
      std::string n2 = gensym();
      NPtr renamed = nsubst(t->b, t->name, nvar(n2));
      NPtr b = nsubst(renamed, target, repl);
      return t->kind == NTerm::NPi ? npi(n2, d, b) : nlam(n2, d, b);
    }
    case NTerm::NApp:
      return napp(nsubst(t->a, target, repl), nsubst(t->b, target, repl));
  }
  return t;
}

// Random well-scoped de Bruijn terms.
TermPtr random_term(std::mt19937& rng, std::size_t depth, std::size_t nfree_vars) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 5);
  switch (pick(rng)) {
    case 0:
      return std::uniform_int_distribution<int>(0, 1)(rng) ? mk_prop() : mk_set();
    case 1:
      if (nfree_vars > 0) {
        std::uniform_int_distribution<std::size_t> v(0, nfree_vars - 1);
        return mk_var(v(rng));
      }
      return mk_const("c");
    case 2:
      return mk_const(std::uniform_int_distribution<int>(0, 1)(rng) ? "c" : "d");
    case 3:
      return mk_pi("x", random_term(rng, depth - 1, nfree_vars),
                   random_term(rng, depth - 1, nfree_vars + 1));
    case 4:
      return mk_lam("x", random_term(rng, depth - 1, nfree_vars),
                    random_term(rng, depth - 1, nfree_vars + 1));
    default:
      return mk_app(random_term(rng, depth - 1, nfree_vars),
                    random_term(rng, depth - 1, nfree_vars));
  }
}

std::vector<std::string> outer_names(std::size_t n) {
  std::vector<std::string> ctx;
  for (std::size_t i = 0; i < n; ++i) ctx.push_back("v" + std::to_string(i));
  return ctx;
}

}  // namespace

TEST_CASE("lift examples") {
  CHECK(syntactic_eq(lift(mk_var(0), 1, 0), mk_var(1)));
  TermPtr lam = mk_lam("x", mk_prop(), mk_var(0));
  CHECK(syntactic_eq(lift(lam, 5, 0), lam));
  TermPtr t = mk_app(mk_var(2), mk_var(0));
  CHECK(syntactic_eq(lift(t, 3, 1), mk_app(mk_var(5), mk_var(0))));
}

TEST_CASE("subst examples") {
  CHECK(syntactic_eq(subst(mk_var(0), 0, mk_const("c")), mk_const("c")));
  TermPtr a = mk_const("A");
  TermPtr lam = mk_lam("y", a, mk_var(1));
  CHECK(syntactic_eq(subst(lam, 0, mk_const("c")),
                     mk_lam("y", a, mk_const("c"))));
  // beta: (fun x : A => fun y : B => x y) g  ~>  fun y : B => g y
  TermPtr body = mk_lam("y", mk_const("B"), mk_app(mk_var(1), mk_var(0)));
  TermPtr reduced = subst(body, 0, mk_const("g"));
  CHECK(syntactic_eq(reduced, mk_lam("y", mk_const("B"),
                                     mk_app(mk_const("g"), mk_var(0)))));
}

TEST_CASE("syntactic_eq ignores hints, distinguishes levels") {
  CHECK(syntactic_eq(mk_var(3), mk_var(3)));
  TermPtr p = mk_const("P");
  CHECK(syntactic_eq(mk_lam("x", p, mk_var(0)), mk_lam("y", p, mk_var(0))));
  CHECK_FALSE(syntactic_eq(mk_type(4), mk_type(5)));
  CHECK(syntactic_eq(mk_type(4), mk_type(4)));
}

TEST_CASE("lift by zero is identity and lift/subst cancel") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 300; ++i) {
    std::size_t nf = 1 + i % 4;
    TermPtr t = random_term(rng, 6, nf);
    for (std::size_t k = 0; k < 3; ++k) CHECK(syntactic_eq(lift(t, 0, k), t));
    TermPtr u = random_term(rng, 3, nf);
    for (std::size_t j = 0; j < nf; ++j) {
      CHECK(syntactic_eq(subst(lift(t, 1, j), j, u), t));
    }
  }
}

TEST_CASE("lift agrees with the named renamer oracle") {
  std::mt19937 rng(777);
  for (int i = 0; i < 400; ++i) {
    std::size_t nf = 1 + i % 5;
    TermPtr t = random_term(rng, 8, nf);
    std::uniform_int_distribution<std::size_t> cut(0, nf);
    std::size_t cutoff = cut(rng);
    std::size_t amount = 1 + i % 3;

    std::vector<std::string> ctx = outer_names(nf);
    NPtr named = to_named(t, ctx);
    // Insert `amount` fresh names at position cutoff; free variables above
    // the cutoff then resolve to shifted indices.
    std::vector<std::string> ctx2 = outer_names(nf);
    for (std::size_t k = 0; k < amount; ++k)
      ctx2.insert(ctx2.begin() + cutoff, gensym());
    TermPtr oracle = from_named(named, ctx2);
    CHECK(syntactic_eq(lift(t, amount, cutoff), oracle));
  }
}

TEST_CASE("subst agrees with the named substitution oracle") {
  std::mt19937 rng(31337);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    std::size_t nf = 1 + i % 4;
    TermPtr t = random_term(rng, 8, nf);
    std::uniform_int_distribution<std::size_t> jd(0, nf - 1);
    std::size_t j = jd(rng);
    TermPtr u = random_term(rng, 4, nf - j - 1);

    std::vector<std::string> ctx = outer_names(nf);
    NPtr named_t = to_named(t, ctx);
    std::vector<std::string> uctx(ctx.begin() + j + 1, ctx.end());
    NPtr named_u = to_named(u, uctx);
    NPtr named_res = nsubst(named_t, ctx[j], named_u);
    std::vector<std::string> rctx = ctx;
    rctx.erase(rctx.begin() + j);
    TermPtr oracle = from_named(named_res, rctx);
    CHECK(syntactic_eq(subst(t, j, lift(u, 0, 0)), oracle));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("fv bound tracks free variables") {
  CHECK(mk_const("c")->fv_bound == 0);
  CHECK(mk_var(4)->fv_bound == 5);
  CHECK(mk_lam("x", mk_prop(), mk_var(0))->fv_bound == 0);
  CHECK(mk_lam("x", mk_prop(), mk_var(1))->fv_bound == 1);
  CHECK(mk_pi("x", mk_var(2), mk_var(0))->fv_bound == 3);
}

TEST_CASE("spine collection") {
  TermPtr t = mk_app(mk_app(mk_const("f"), mk_var(0)), mk_var(1));
  Spine s = collect_spine(t);
  CHECK(s.head->as_const()->name == "f");
  REQUIRE(s.args.size() == 2);
  CHECK(s.args[0]->as_var()->index == 0);
  CHECK(s.args[1]->as_var()->index == 1);
}
