// Copyright 2026 The regunify Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regunify/parser.h"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <utility>

namespace regunify {

namespace {

enum class Tok {
  kVar,
  kAtom,
  kPrimed,
  kQuoted,
  kInt,
  kFloat,
  kString,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kBar,
  kComma,
  kEnd,
  kPlus,
  kEq,
  kStar,
  kColon,
  kNeck,
  kArrow,
  kFuncArrow,
  kQuery,
  kMinus,
  kEof,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEof:
      return "end of input";
    case Tok::kEnd:
      return "'.'";
    case Tok::kString:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view file)
      : text_(text), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t{Tok::kEof, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  char at(std::size_t k = 0) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, SourceSpan{std::string(file_), line_, column_});
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = at();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && at() != '\n') advance();
      } else {
        return;
      }
    }
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void lex_one(Token& t) {
    const char c = at();
    auto symbol = [&](Tok kind, std::size_t n) {
      t.kind = kind;
      t.text = std::string(text_.substr(pos_, n));
      advance(n);
    };
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(t);
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (ident_char(at())) advance();
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = Tok::kAtom;
      if (at() == '\'' && at(1) != '\'') {
        advance();
        t.kind = Tok::kPrimed;
      }
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (ident_char(at())) advance();
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = Tok::kVar;
      return;
    }
    switch (c) {
      case '\'':
        return lex_quoted(t, '\'', Tok::kQuoted);
      case '"':
        return lex_quoted(t, '"', Tok::kString);
      case '(':
        return symbol(Tok::kLParen, 1);
      case ')':
        return symbol(Tok::kRParen, 1);
      case '[':
        return symbol(Tok::kLBracket, 1);
      case ']':
        return symbol(Tok::kRBracket, 1);
      case '|':
        return symbol(Tok::kBar, 1);
      case ',':
        return symbol(Tok::kComma, 1);
      case '.':
        return symbol(Tok::kEnd, 1);
      case '+':
        return symbol(Tok::kPlus, 1);
      case '=':
        return symbol(Tok::kEq, 1);
      case '*':
        return symbol(Tok::kStar, 1);
      case ':':
        if (at(1) == '-') return symbol(Tok::kNeck, 2);
        return symbol(Tok::kColon, 1);
      case '?':
        if (at(1) == '-') return symbol(Tok::kQuery, 2);
        break;
      case '-':
        if (at(1) == '-' && at(2) == '>') return symbol(Tok::kArrow, 3);
        if (at(1) == '>') return symbol(Tok::kFuncArrow, 2);
        return symbol(Tok::kMinus, 1);
      default:
        break;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void lex_number(Token& t) {
    std::size_t start = pos_;
    bool is_float = false;
    while (std::isdigit(static_cast<unsigned char>(at()))) advance();
    if (at() == '.' && std::isdigit(static_cast<unsigned char>(at(1)))) {
      is_float = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(at()))) advance();
    }
    if ((at() == 'e' || at() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(at(1))) ||
         ((at(1) == '+' || at(1) == '-') &&
          std::isdigit(static_cast<unsigned char>(at(2)))))) {
      is_float = true;
      advance(2);
      while (std::isdigit(static_cast<unsigned char>(at()))) advance();
    }
    t.kind = is_float ? Tok::kFloat : Tok::kInt;
    t.text = std::string(text_.substr(start, pos_ - start));
  }

  void lex_quoted(Token& t, char quote, Tok kind) {
    advance();
    t.kind = kind;
    for (;;) {
      if (pos_ >= text_.size()) fail("unterminated quoted text");
      char c = at();
      if (c == quote) {
        advance();
        return;
      }
      if (c == '\\') {
        char e = at(1);
        if (e == 'n') {
          t.text += '\n';
        } else if (e == 't') {
          t.text += '\t';
        } else if (e == '\\' || e == '\'' || e == '"') {
          t.text += e;
        } else {
          fail("unknown escape sequence");
        }
        advance(2);
        continue;
      }
      t.text += c;
      advance();
    }
  }

  std::string_view text_;
  std::string_view file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string canonical_int(const Token& t, bool negative) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw SyntaxError("integer literal out of range",
                      SourceSpan{"<input>", t.line, t.column});
  }
  return std::to_string(negative ? -value : value);
}

std::string canonical_float(const Token& t, bool negative) {
  double value = std::strtod(t.text.c_str(), nullptr);
  if (negative) value = -value;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string out(buf, ptr);
  if (out.find_first_of(".en") == std::string::npos) out += ".0";
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view file)
      : text_(text), file_(file), tokens_(Lexer(text, file).run()) {}

  const Token& peek(std::size_t k = 0) const {
    return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_eof() const { return at(Tok::kEof); }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }

  Token expect(Tok kind, std::string_view what) {
    if (!at(kind)) {
      error("expected " + std::string(what) + " but found " + describe(peek()));
    }
    return take();
  }

  SourceSpan span_of(const Token& t) const {
    return SourceSpan{std::string(file_), t.line, t.column};
  }

  [[noreturn]] void error(const std::string& message) const {
    throw SyntaxError(message, span_of(peek()));
  }

  void expect_eof() {
    if (!at_eof()) error("unexpected " + describe(peek()));
  }

  // sum := primary ('+' primary)*
  Term term() {
    Term lhs = primary();
    while (accept(Tok::kPlus)) {
      lhs = Term::compound("+", {lhs, primary()});
    }
    if (at(Tok::kEq)) error("'=' is only allowed at the top of a goal");
    return lhs;
  }

  // goal := sum [('=' | 'is') sum]
  Term goal() {
    Term lhs = primary();
    while (accept(Tok::kPlus)) lhs = Term::compound("+", {lhs, primary()});
    if (accept(Tok::kEq)) return Term::compound("=", {lhs, term()});
    if (at(Tok::kAtom) && peek().text == "is") {
      take();
      return Term::compound("is", {lhs, term()});
    }
    return lhs;
  }

  Term primary() {
    const Token t = take();
    switch (t.kind) {
      case Tok::kVar:
        if (t.text == "_") return Term::var(anonymous_name());
        return Term::var(t.text);
      case Tok::kInt:
        return Term::constant(canonical_int(t, false), LiteralKind::kInt);
      case Tok::kFloat:
        return Term::constant(canonical_float(t, false), LiteralKind::kFloat);
      case Tok::kMinus: {
        const Token n = take();
        if (n.kind == Tok::kInt) {
          return Term::constant(canonical_int(n, true), LiteralKind::kInt);
        }
        if (n.kind == Tok::kFloat) {
          return Term::constant(canonical_float(n, true), LiteralKind::kFloat);
        }
        throw SyntaxError("expected a number after '-'", span_of(t));
      }
      case Tok::kString:
        return Term::constant(t.text, LiteralKind::kString);
      case Tok::kAtom:
      case Tok::kQuoted: {
        if (!accept(Tok::kLParen)) return Term::atom(t.text);
        std::vector<Term> args = {term()};
        while (accept(Tok::kComma)) args.push_back(term());
        expect(Tok::kRParen, "',' or ')'");
        std::string functor = t.text;
        if (functor == "." && args.size() == 2) functor = kConsSymbol;
        return Term::compound(std::move(functor), std::move(args));
      }
      case Tok::kLBracket: {
        if (accept(Tok::kRBracket)) return Term::nil();
        std::vector<Term> items = {term()};
        while (accept(Tok::kComma)) items.push_back(term());
        Term tail = accept(Tok::kBar) ? term() : Term::nil();
        expect(Tok::kRBracket, "',', '|' or ']'");
        for (auto it = items.rbegin(); it != items.rend(); ++it) {
          tail = Term::cons(*it, tail);
        }
        return tail;
      }
      case Tok::kLParen: {
        Term inner = term();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kEq:
        throw SyntaxError("'=' is only allowed at the top of a goal",
                          span_of(t));
      default:
        throw SyntaxError("expected a term but found " + describe(t),
                          span_of(t));
    }
  }

  std::vector<TypeExpr> type_args() {
    std::vector<TypeExpr> args;
    if (!accept(Tok::kLParen)) return args;
    args.push_back(type());
    while (accept(Tok::kComma)) args.push_back(type());
    expect(Tok::kRParen, "',' or ')'");
    return args;
  }

  TypeExpr type() {
    const Token t = take();
    switch (t.kind) {
      case Tok::kVar:
        return TypeExpr::var(t.text);
      case Tok::kAtom:
      case Tok::kQuoted: {
        if (t.kind == Tok::kAtom && !at(Tok::kLParen)) {
          if (auto base = base_type_from_name(t.text)) {
            return TypeExpr::base(*base);
          }
          if (t.text == "bool") return TypeExpr::boolean();
        }
        return TypeExpr::sym(t.text, type_args());
      }
      case Tok::kPrimed:
        return TypeExpr::sym(implicit_type_symbol(t.text), type_args());
      case Tok::kLBracket:
        expect(Tok::kRBracket, "']'");
        return TypeExpr::ctor(std::string(kNilSymbol));
      default:
        throw SyntaxError("expected a type but found " + describe(t),
                          span_of(t));
    }
  }

  // Summands are parsed permissively; validation rejects the ones that are
  // not constructor terms.
  TypeExpr summand() {
    if (at(Tok::kVar) || at(Tok::kPrimed)) return type();
    if (accept(Tok::kLBracket)) {
      expect(Tok::kRBracket, "']'");
      return TypeExpr::ctor(std::string(kNilSymbol));
    }
    const Token t = take();
    if (t.kind != Tok::kAtom && t.kind != Tok::kQuoted) {
      throw SyntaxError("expected a summand but found " + describe(t),
                        span_of(t));
    }
    if (t.kind == Tok::kAtom && !at(Tok::kLParen)) {
      if (auto base = base_type_from_name(t.text)) return TypeExpr::base(*base);
      if (t.text == "bool") return TypeExpr::boolean();
    }
    return TypeExpr::ctor(t.text, type_args());
  }

  TypeDef typedef_clause() {
    TypeDef def;
    const Token head = take();
    def.span = span_of(head);
    if (head.kind != Tok::kAtom && head.kind != Tok::kQuoted) {
      throw SyntaxError("expected a type symbol but found " + describe(head),
                        def.span);
    }
    def.head = head.text;
    if (accept(Tok::kLParen)) {
      def.params.push_back(expect(Tok::kVar, "a type variable").text);
      while (accept(Tok::kComma)) {
        def.params.push_back(expect(Tok::kVar, "a type variable").text);
      }
      expect(Tok::kRParen, "',' or ')'");
    }
    expect(Tok::kArrow, "'-->'");
    def.summands.push_back(summand());
    while (accept(Tok::kPlus)) def.summands.push_back(summand());
    expect(Tok::kEnd, "'+' or '.'");
    return def;
  }

  SignatureDecl signature_clause() {
    SignatureDecl decl;
    const Token name = take();
    decl.span = span_of(name);
    switch (name.kind) {
      case Tok::kAtom:
      case Tok::kQuoted:
        decl.name = name.text;
        break;
      case Tok::kLBracket:
        expect(Tok::kRBracket, "']'");
        decl.name = std::string(kNilSymbol);
        break;
      case Tok::kInt:
        decl.name = canonical_int(name, false);
        decl.name_kind = LiteralKind::kInt;
        break;
      case Tok::kFloat:
        decl.name = canonical_float(name, false);
        decl.name_kind = LiteralKind::kFloat;
        break;
      case Tok::kString:
        decl.name = name.text;
        decl.name_kind = LiteralKind::kString;
        break;
      default:
        throw SyntaxError("expected a symbol but found " + describe(name),
                          decl.span);
    }
    expect(Tok::kColon, "':'");
    std::vector<TypeExpr> parts = {type()};
    while (accept(Tok::kStar)) parts.push_back(type());
    if (accept(Tok::kFuncArrow)) {
      TypeExpr codomain = type();
      decl.scheme = TypeScheme::generalize(FuncType{parts, codomain});
    } else if (parts.size() > 1) {
      error("a product type needs '-> result'");
    } else {
      decl.scheme = TypeScheme::generalize(parts.front());
    }
    expect(Tok::kEnd, "'.'");
    return decl;
  }

  Clause program_clause() {
    Clause clause{Term::nil(), {}, span_of(peek())};
    clause.head = goal();
    if (clause.head.is_var() || (clause.head.is_const() &&
                                 clause.head.literal_kind() != LiteralKind::kAtom)) {
      throw SyntaxError("clause head must be an atom or compound term",
                        clause.span);
    }
    if (clause.head.is_compound() && clause.head.name() == "=" &&
        clause.head.arity() == 2) {
      throw SyntaxError("clause head cannot be an equation", clause.span);
    }
    if (accept(Tok::kNeck)) {
      clause.body.push_back(goal());
      while (accept(Tok::kComma)) clause.body.push_back(goal());
    }
    expect(Tok::kEnd, "':-', ',' or '.'");
    return clause;
  }

 private:
  std::string anonymous_name() {
    for (;;) {
      std::string name = "_" + std::to_string(++anonymous_);
      if (text_.find(name) == std::string_view::npos) return name;
    }
  }

  std::string_view text_;
  std::string_view file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int anonymous_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, std::string_view file) {
  Parser p(text, file);
  Term t = p.term();
  p.expect_eof();
  return t;
}

std::pair<Term, Term> parse_equation(std::string_view text,
                                     std::string_view file) {
  Parser p(text, file);
  Term goal = p.goal();
  p.accept(Tok::kEnd);
  p.expect_eof();
  if (!goal.is_compound() || goal.name() != "=" || goal.arity() != 2) {
    throw SyntaxError("expected an equation t1 = t2", SourceSpan{std::string(file)});
  }
  return {goal.args()[0], goal.args()[1]};
}

Term parse_goal(std::string_view text, std::string_view file) {
  Parser p(text, file);
  Term goal = p.goal();
  p.accept(Tok::kEnd);
  p.expect_eof();
  return goal;
}

TypeExpr parse_type(std::string_view text, std::string_view file) {
  Parser p(text, file);
  TypeExpr t = p.type();
  p.expect_eof();
  return t;
}

std::vector<TypeDef> parse_typedefs(std::string_view text,
                                    std::string_view file) {
  Parser p(text, file);
  std::vector<TypeDef> defs;
  while (!p.at_eof()) defs.push_back(p.typedef_clause());
  return defs;
}

std::vector<SignatureDecl> parse_signatures(std::string_view text,
                                            std::string_view file) {
  Parser p(text, file);
  std::vector<SignatureDecl> decls;
  while (!p.at_eof()) decls.push_back(p.signature_clause());
  return decls;
}

std::vector<std::pair<std::string, TypeExpr>> parse_context(
    std::string_view text, std::string_view file) {
  Parser p(text, file);
  std::vector<std::pair<std::string, TypeExpr>> out;
  while (!p.at_eof()) {
    std::string name = p.expect(Tok::kVar, "a variable").text;
    p.expect(Tok::kColon, "':'");
    out.emplace_back(std::move(name), p.type());
    if (!p.accept(Tok::kComma) && !p.accept(Tok::kEnd)) p.expect_eof();
  }
  return out;
}

std::vector<Clause> parse_program(std::string_view text,
                                  std::string_view file) {
  Parser p(text, file);
  std::vector<Clause> clauses;
  while (!p.at_eof()) clauses.push_back(p.program_clause());
  return clauses;
}

std::vector<Term> parse_query(std::string_view text, std::string_view file) {
  Parser p(text, file);
  p.accept(Tok::kQuery);
  std::vector<Term> goals = {p.goal()};
  while (p.accept(Tok::kComma)) goals.push_back(p.goal());
  p.accept(Tok::kEnd);
  p.expect_eof();
  return goals;
}

}  // namespace regunify
