#include <cctype>
#include <sstream>

#include "pdx/syntax.hpp"

namespace pdx {

namespace {

enum class Tok {
  Ident,
  Number,
  Keyword,
  Dot,
  Colon,
  Assign,   // :=
  Arrow,    // ->
  MapsTo,   // =>
  LParen,
  RParen,
  Comma,
  Pipe,
  At,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

const char* kKeywords[] = {
    "Definition", "Lemma",     "Theorem", "Inductive", "Section",  "End",
    "Variable",   "Hypothesis", "Axiom",   "Check",     "Normalize", "Opaque",
    "forall",     "fun",        "Prop",    "Set",       "Type",      "Star",
    "Box",        "Triangle"};

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

[[noreturn]] void parse_fail(const std::string& filename, SourcePos pos,
                             const std::string& message) {
  CheckError err(ErrorKind::ParseError, filename + ":" + std::to_string(pos.line) + ":" +
                                            std::to_string(pos.col) + ": " + message);
  err.file = filename;
  err.line = pos.line;
  throw err;
}

std::vector<Token> tokenize(const std::string& text, const std::string& filename) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      std::string word = text.substr(i, j - i);
      advance(j - i);
      out.push_back(Token{is_keyword(word) ? Tok::Keyword : Tok::Ident, word, pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string num = text.substr(i, j - i);
      advance(j - i);
      out.push_back(Token{Tok::Number, num, pos});
      continue;
    }
    switch (c) {
      case '.':
        out.push_back(Token{Tok::Dot, ".", pos});
        advance(1);
        continue;
      case '(':
        out.push_back(Token{Tok::LParen, "(", pos});
        advance(1);
        continue;
      case ')':
        out.push_back(Token{Tok::RParen, ")", pos});
        advance(1);
        continue;
      case ',':
        out.push_back(Token{Tok::Comma, ",", pos});
        advance(1);
        continue;
      case '|':
        out.push_back(Token{Tok::Pipe, "|", pos});
        advance(1);
        continue;
      case '@':
        out.push_back(Token{Tok::At, "@", pos});
        advance(1);
        continue;
      case ':':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back(Token{Tok::Assign, ":=", pos});
          advance(2);
        } else {
          out.push_back(Token{Tok::Colon, ":", pos});
          advance(1);
        }
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back(Token{Tok::Arrow, "->", pos});
          advance(2);
          continue;
        }
        parse_fail(filename, pos, "stray '-'");
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back(Token{Tok::MapsTo, "=>", pos});
          advance(2);
          continue;
        }
        parse_fail(filename, pos, "stray '='; equality is the identifier 'eq'");
      default:
        parse_fail(filename, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", SourcePos{line, col}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string filename)
      : toks_(std::move(toks)), filename_(std::move(filename)) {}

  std::vector<Vernacular> file() {
    std::vector<Vernacular> out;
    while (peek().kind != Tok::End) out.push_back(command());
    return out;
  }

  SExprPtr bare_expression() {
    SExprPtr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_keyword(const char* kw) const {
    return peek().kind == Tok::Keyword && peek().text == kw;
  }
  bool eat_keyword(const char* kw) {
    if (at_keyword(kw)) {
      next();
      return true;
    }
    return false;
  }
  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      parse_fail(filename_, peek().pos,
                 "expected " + std::string(what) + ", found '" + peek().text + "'");
    return next();
  }
  std::string expect_ident() {
    if (peek().kind != Tok::Ident)
      parse_fail(filename_, peek().pos,
                 "expected an identifier, found '" + peek().text + "'");
    return next().text;
  }

  Vernacular command() {
    Vernacular cmd;
    cmd.pos = peek().pos;
    if (eat_keyword("Definition") || eat_keyword("Lemma") || eat_keyword("Theorem")) {
      cmd.kind = Vernacular::Kind::Definition;
      cmd.name = expect_ident();
      cmd.binders = binder_groups(true);
      if (peek().kind == Tok::Colon) {
        next();
        cmd.type = expr();
      }
      expect(Tok::Assign, "':='");
      cmd.body = expr();
      if (eat_keyword("Opaque")) cmd.opaque = true;
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    if (eat_keyword("Inductive")) {
      cmd.kind = Vernacular::Kind::Inductive;
      cmd.name = expect_ident();
      cmd.params = binder_groups(true);
      expect(Tok::Colon, "':'");
      cmd.arity = expr();
      expect(Tok::Assign, "':='");
      if (peek().kind != Tok::Dot) {
        if (peek().kind == Tok::Pipe) next();
        while (true) {
          std::string cname = expect_ident();
          expect(Tok::Colon, "':'");
          cmd.ctors.emplace_back(cname, expr());
          if (peek().kind == Tok::Pipe) {
            next();
            continue;
          }
          break;
        }
      }
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    if (eat_keyword("Section")) {
      cmd.kind = Vernacular::Kind::Section;
      cmd.name = expect_ident();
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    if (eat_keyword("End")) {
      cmd.kind = Vernacular::Kind::End;
      cmd.name = expect_ident();
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    if (at_keyword("Variable") || at_keyword("Hypothesis") || at_keyword("Axiom")) {
      std::string kw = next().text;
      cmd.kind = Vernacular::Kind::Variable;
      cmd.binder_kind = kw == "Variable"     ? BinderKind::Variable
                        : kw == "Hypothesis" ? BinderKind::Hypothesis
                                             : BinderKind::Axiom;
      cmd.name = expect_ident();
      expect(Tok::Colon, "':'");
      cmd.type = expr();
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    if (eat_keyword("Check")) {
      cmd.kind = Vernacular::Kind::Check;
      cmd.body = expr();
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    if (eat_keyword("Normalize")) {
      cmd.kind = Vernacular::Kind::Normalize;
      if (peek().kind == Tok::Number) cmd.fuel = std::stoull(next().text);
      cmd.body = expr();
      expect(Tok::Dot, "'.'");
      return cmd;
    }
    parse_fail(filename_, peek().pos,
               "expected a command (Definition, Inductive, Section, End, Variable, "
               "Hypothesis, Axiom, Check, Normalize), found '" +
                   peek().text + "'");
  }

  // Parenthesized groups "(x y : T) (z : U)"; with allow_empty, zero groups.
  std::vector<BinderGroup> binder_groups(bool allow_empty) {
    std::vector<BinderGroup> groups;
    while (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident) {
      // Lookahead for "ident+ :" to distinguish a binder from a paren expr.
      std::size_t k = 1;
      while (peek(k).kind == Tok::Ident) ++k;
      if (peek(k).kind != Tok::Colon) break;
      next();  // (
      BinderGroup g;
      while (peek().kind == Tok::Ident) g.names.push_back(next().text);
      expect(Tok::Colon, "':'");
      g.type = expr();
      expect(Tok::RParen, "')'");
      groups.push_back(std::move(g));
    }
    if (groups.empty() && !allow_empty)
      parse_fail(filename_, peek().pos, "expected at least one binder group");
    return groups;
  }

  // Binders of forall/fun: either parenthesized groups or one bare group
  // "x y : T".
  std::vector<BinderGroup> quantifier_binders() {
    if (peek().kind == Tok::LParen) {
      auto groups = binder_groups(false);
      return groups;
    }
    BinderGroup g;
    while (peek().kind == Tok::Ident) g.names.push_back(next().text);
    if (g.names.empty())
      parse_fail(filename_, peek().pos, "expected binder names");
    expect(Tok::Colon, "':'");
    g.type = expr();
    return {std::move(g)};
  }

  SExprPtr mk(SExpr node) const { return std::make_shared<SExpr>(std::move(node)); }

  SExprPtr expr() {
    SourcePos pos = peek().pos;
    if (eat_keyword("forall")) {
      auto groups = quantifier_binders();
      expect(Tok::Comma, "','");
      SExpr e;
      e.node = SExpr::Forall{std::move(groups), expr()};
      e.pos = pos;
      return mk(std::move(e));
    }
    if (eat_keyword("fun")) {
      auto groups = quantifier_binders();
      expect(Tok::MapsTo, "'=>'");
      SExpr e;
      e.node = SExpr::Fun{std::move(groups), expr()};
      e.pos = pos;
      return mk(std::move(e));
    }
    SExprPtr lhs = app_expr();
    if (peek().kind == Tok::Arrow) {
      next();
      SExpr e;
      e.node = SExpr::Arrow{lhs, expr()};
      e.pos = pos;
      return mk(std::move(e));
    }
    return lhs;
  }

  SExprPtr app_expr() {
    SourcePos pos = peek().pos;
    SExprPtr fn = atom();
    std::vector<SExprPtr> args;
    while (true) {
      if (peek().kind == Tok::Ident || peek().kind == Tok::LParen ||
          at_keyword("Prop") || at_keyword("Set") || at_keyword("Type") ||
          at_keyword("Star") || at_keyword("Box") || at_keyword("Triangle")) {
        args.push_back(atom());
        continue;
      }
      break;
    }
    if (args.empty()) return fn;
    SExpr e;
    e.node = SExpr::Apply{fn, std::move(args)};
    e.pos = pos;
    return mk(std::move(e));
  }

  SExprPtr atom() {
    SourcePos pos = peek().pos;
    if (peek().kind == Tok::LParen) {
      next();
      SExprPtr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (peek().kind == Tok::Ident) {
      SExpr e;
      e.node = SExpr::Ident{next().text};
      e.pos = pos;
      return mk(std::move(e));
    }
    if (peek().kind == Tok::Keyword) {
      static const std::pair<const char*, Sort::Kind> sorts[] = {
          {"Prop", Sort::Kind::Prop},         {"Set", Sort::Kind::Set},
          {"Type", Sort::Kind::Type},         {"Star", Sort::Kind::Star},
          {"Box", Sort::Kind::Box},           {"Triangle", Sort::Kind::Triangle}};
      for (const auto& [kw, kind] : sorts) {
        if (at_keyword(kw)) {
          next();
          SExpr e;
          SExpr::SortLit lit{kind, std::nullopt};
          if (kind == Sort::Kind::Type && peek().kind == Tok::At) {
            next();
            Token num = expect(Tok::Number, "a level number after 'Type@'");
            lit.level = static_cast<LevelId>(std::stoul(num.text));
          }
          e.node = lit;
          e.pos = pos;
          return mk(std::move(e));
        }
      }
    }
    parse_fail(filename_, pos, "expected an expression, found '" + peek().text + "'");
  }

  std::vector<Token> toks_;
  std::string filename_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Vernacular> parse_file(const std::string& text, const std::string& filename) {
  Parser parser(tokenize(text, filename), filename);
  return parser.file();
}

SExprPtr parse_expression(const std::string& text, const std::string& filename) {
  Parser parser(tokenize(text, filename), filename);
  return parser.bare_expression();
}

}  // namespace pdx
