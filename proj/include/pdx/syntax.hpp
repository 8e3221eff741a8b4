// Lexer, parser and pretty-printer for the vernacular the corpus is written
// in: a small Gallina-like language with explicit arguments and no notations.
// One command per '.'-terminated sentence, '--' line comments.
#ifndef PDX_SYNTAX_HPP
#define PDX_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pdx/env.hpp"
#include "pdx/kernel.hpp"

namespace pdx {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

// A binder group: the names of "(x y : T)".
struct BinderGroup {
  std::vector<std::string> names;
  SExprPtr type;
};

struct SExpr {
  struct Ident {
    std::string name;
  };
  struct SortLit {
    Sort::Kind kind;
    std::optional<LevelId> level;  // explicit Type@N annotation
  };
  struct Arrow {
    SExprPtr lhs;
    SExprPtr rhs;
  };
  struct Forall {
    std::vector<BinderGroup> groups;
    SExprPtr body;
  };
  struct Fun {
    std::vector<BinderGroup> groups;
    SExprPtr body;
  };
  struct Apply {
    SExprPtr fn;
    std::vector<SExprPtr> args;
  };

  std::variant<Ident, SortLit, Arrow, Forall, Fun, Apply> node;
  SourcePos pos;
};

struct Vernacular {
  enum class Kind { Definition, Inductive, Section, End, Variable, Check, Normalize };

  Kind kind = Kind::Definition;
  SourcePos pos;
  std::string name;

  // Definition (also Lemma/Theorem): binders fold into the body as lambdas
  // and into the ascribed type as products.
  std::vector<BinderGroup> binders;
  SExprPtr type;  // may be null
  SExprPtr body;
  bool opaque = false;

  BinderKind binder_kind = BinderKind::Variable;

  // Inductive.
  std::vector<BinderGroup> params;
  SExprPtr arity;
  std::vector<std::pair<std::string, SExprPtr>> ctors;

  // Normalize.
  std::optional<std::uint64_t> fuel;
};

// Throws CheckError(ParseError) with line/column on malformed input.
std::vector<Vernacular> parse_file(const std::string& text, const std::string& filename);
SExprPtr parse_expression(const std::string& text, const std::string& filename);

// Name resolution: innermost locals first, then globals; `Type` occurrences
// allocate fresh levels in env's graph.
TermPtr resolve(GlobalEnv& env, std::vector<std::string>& locals, const SExprPtr& e);

struct PrintOptions {
  bool levels = true;  // render Type as Type@N so terms round-trip exactly
};
std::string print_term(const GlobalEnv& env, const TermPtr& t,
                       const PrintOptions& opts = {});

}  // namespace pdx

#endif
