#include <sstream>

#include "pdx/syntax.hpp"

namespace pdx {

namespace {

bool uses_index(const TermPtr& t, std::size_t index) {
  if (t->fv_bound <= index) return false;
  if (auto v = t->as_var()) return v->index == index;
  if (auto p = t->as_pi())
    return uses_index(p->domain, index) || uses_index(p->codomain, index + 1);
  if (auto l = t->as_lam())
    return uses_index(l->domain, index) || uses_index(l->body, index + 1);
  if (auto a = t->as_app())
    return uses_index(a->fn, index) || uses_index(a->arg, index);
  return false;
}

class Printer {
 public:
  Printer(const GlobalEnv& env, const PrintOptions& opts) : env_(env), opts_(opts) {}

  std::string run(const TermPtr& t) {
    std::ostringstream out;
    render(out, t, 0);
    return out.str();
  }

 private:
  // Precedence levels: 0 = whole expression (forall/fun/arrow), 1 = arrow
  // operand (left side), 2 = application argument.
  void render(std::ostringstream& out, const TermPtr& t, int prec) {
    if (auto s = t->as_sort()) {
      out << sort_name(s->sort);
      if (s->sort.kind == Sort::Kind::Type && opts_.levels) out << "@" << s->sort.level;
      return;
    }
    if (auto v = t->as_var()) {
      if (v->index < names_.size()) {
        out << names_[names_.size() - 1 - v->index];
      } else {
        out << "#" << v->index;  // unbound; only reachable on malformed input
      }
      return;
    }
    if (auto c = t->as_const()) {
      out << c->name;
      return;
    }
    if (auto a = t->as_app()) {
      if (prec >= 2) {
        out << "(";
        render(out, t, 0);
        out << ")";
        return;
      }
      render(out, a->fn, 1);
      out << " ";
      render(out, a->arg, 2);
      return;
    }
    if (auto p = t->as_pi()) {
      if (prec >= 1) {
        out << "(";
        render(out, t, 0);
        out << ")";
        return;
      }
      if (!uses_index(p->codomain, 0)) {
        render(out, p->domain, 1);
        out << " -> ";
        names_.push_back("_");
        render(out, p->codomain, 0);
        names_.pop_back();
        return;
      }
      std::string name = fresh(p->hint);
      out << "forall " << name << " : ";
      render(out, p->domain, 0);
      out << ", ";
      names_.push_back(name);
      render(out, p->codomain, 0);
      names_.pop_back();
      return;
    }
    auto l = t->as_lam();
    if (prec >= 1) {
      out << "(";
      render(out, t, 0);
      out << ")";
      return;
    }
    std::string name = fresh(l->hint);
    out << "fun " << name << " : ";
    render(out, l->domain, 0);
    out << " => ";
    names_.push_back(name);
    render(out, l->body, 0);
    names_.pop_back();
    return;
  }

  bool clashes(const std::string& name) const {
    if (env_.has_name(name)) return true;
    for (const auto& n : names_) {
      if (n == name) return true;
    }
    return false;
  }

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    // Strip a previous freshening suffix so round-trips stay stable.
    if (!clashes(base)) return base;
    for (int i = 0;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (!clashes(candidate)) return candidate;
    }
  }

  const GlobalEnv& env_;
  PrintOptions opts_;
  std::vector<std::string> names_;
};

}  // namespace

std::string print_term(const GlobalEnv& env, const TermPtr& t, const PrintOptions& opts) {
  return Printer(env, opts).run(t);
}

}  // namespace pdx
