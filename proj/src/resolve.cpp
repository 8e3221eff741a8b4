#include <algorithm>

#include "pdx/syntax.hpp"

namespace pdx {

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t cur = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev = cur;
    }
  }
  return row[b.size()];
}

[[noreturn]] void unknown_identifier(const GlobalEnv& env,
                                     const std::vector<std::string>& locals,
                                     const SExpr::Ident& id, SourcePos pos) {
  std::vector<std::string> candidates;
  auto consider = [&](const std::string& name) {
    if (candidates.size() < 3 && edit_distance(name, id.name) <= 2 &&
        std::find(candidates.begin(), candidates.end(), name) == candidates.end())
      candidates.push_back(name);
  };
  for (const auto& l : locals) consider(l);
  for (const auto& n : env.declaration_order()) consider(n);
  std::string msg = "unknown identifier '" + id.name + "' at line " +
                    std::to_string(pos.line);
  if (!candidates.empty()) {
    msg += "; nearest candidates:";
    for (const auto& c : candidates) msg += " " + c;
  }
  throw CheckError(ErrorKind::UnknownIdentifier, msg);
}

}  // namespace

TermPtr resolve(GlobalEnv& env, std::vector<std::string>& locals, const SExprPtr& e) {
  if (auto id = std::get_if<SExpr::Ident>(&e->node)) {
    for (std::size_t i = locals.size(); i-- > 0;) {
      if (locals[i] == id->name) return mk_var(locals.size() - 1 - i);
    }
    if (env.has_name(id->name)) return mk_const(id->name);
    unknown_identifier(env, locals, *id, e->pos);
  }
  if (auto s = std::get_if<SExpr::SortLit>(&e->node)) {
    switch (s->kind) {
      case Sort::Kind::Prop: return mk_prop();
      case Sort::Kind::Set: return mk_set();
      case Sort::Kind::Type: {
        if (s->level) {
          if (*s->level >= env.graph().node_count())
            throw CheckError(ErrorKind::UnknownIdentifier,
                             "level Type@" + std::to_string(*s->level) +
                                 " does not exist in this environment");
          return mk_type(*s->level);
        }
        Origin origin = env.current_origin;
        origin.line = e->pos.line;
        origin.reason = "Type occurrence";
        return mk_type(env.fresh_type_level(origin));
      }
      case Sort::Kind::Star: return mk_sort(sort_star());
      case Sort::Kind::Box: return mk_sort(sort_box());
      case Sort::Kind::Triangle: return mk_sort(sort_triangle());
    }
  }
  if (auto a = std::get_if<SExpr::Arrow>(&e->node)) {
    TermPtr lhs = resolve(env, locals, a->lhs);
    TermPtr rhs = resolve(env, locals, a->rhs);
    return mk_arrow(lhs, rhs);
  }
  if (auto f = std::get_if<SExpr::Forall>(&e->node)) {
    std::size_t pushed = 0;
    std::vector<std::pair<std::string, TermPtr>> binders;
    for (const auto& g : f->groups) {
      for (const auto& n : g.names) {
        binders.emplace_back(n, resolve(env, locals, g.type));
        locals.push_back(n);
        ++pushed;
      }
    }
    TermPtr body = resolve(env, locals, f->body);
    locals.resize(locals.size() - pushed);
    for (std::size_t i = binders.size(); i-- > 0;)
      body = mk_pi(binders[i].first, binders[i].second, body);
    return body;
  }
  if (auto f = std::get_if<SExpr::Fun>(&e->node)) {
    std::size_t pushed = 0;
    std::vector<std::pair<std::string, TermPtr>> binders;
    for (const auto& g : f->groups) {
      for (const auto& n : g.names) {
        binders.emplace_back(n, resolve(env, locals, g.type));
        locals.push_back(n);
        ++pushed;
      }
    }
    TermPtr body = resolve(env, locals, f->body);
    locals.resize(locals.size() - pushed);
    for (std::size_t i = binders.size(); i-- > 0;)
      body = mk_lam(binders[i].first, binders[i].second, body);
    return body;
  }
  auto ap = std::get_if<SExpr::Apply>(&e->node);
  TermPtr acc = resolve(env, locals, ap->fn);
  for (const auto& arg : ap->args) acc = mk_app(acc, resolve(env, locals, arg));
  return acc;
}

}  // namespace pdx
