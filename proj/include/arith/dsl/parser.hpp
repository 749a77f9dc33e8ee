#pragma once

// Recursive-descent parser for terms and formulas.
//
//   formula := iff
//   iff     := impl { "<->" impl }
//   impl    := disj [ "->" impl ]
//   disj    := conj { ("\/" | "or") conj }
//   conj    := neg { ("/\" | "and") neg }
//   neg     := ("~" | "not") neg | quant | atom
//   quant   := ("forall" | "exists") ident "in" "[" term ".." term "]" "," formula
//   atom    := "(" formula ")"
//            | term ( "=" term [ "[" term "]" ] | "<>" term | "<=" term
//                   | "<" term | ">=" term | ">" term | "|" term )
//   term    := addsub
//   addsub  := muldiv { ("+" | "-") muldiv }
//   muldiv  := unary { ("*" | "div" | "mod") unary }
//   unary   := "-" unary | power
//   power   := primary [ "^" unary ]
//   primary := integer | ident | ident "(" term { "," term } ")"
//            | "sum" "(" ident "," term "," term "," term ")" | "(" term ")"

#include "arith/dsl/ast.hpp"
#include "arith/dsl/lexer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arith::dsl {

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(ErrorKind::Syntax, peek().span, "expected " + expected + ", found " + describe(peek()));
  }
  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) fail(what);
    return next();
  }
  void expect_end() {
    if (!at(Tok::End)) fail("end of input");
  }

  static Span cover(const Span& from, const Token& last) {
    Span s = from;
    s.length = last.span.offset + last.span.length - from.offset;
    return s;
  }
  Span cover_to_previous(const Span& from) const { return cover(from, tokens_[pos_ == 0 ? 0 : pos_ - 1]); }

  // ---- formulas -------------------------------------------------------

  Formula formula() { return iff(); }

  Formula iff() {
    const Span start = peek().span;
    Formula lhs = impl();
    while (accept(Tok::BiArrow)) {
      Formula rhs = impl();
      lhs = Formula::connective(FormulaKind::Iff, std::move(lhs), std::move(rhs), cover_to_previous(start));
    }
    return lhs;
  }

  Formula impl() {
    const Span start = peek().span;
    Formula lhs = disj();
    if (accept(Tok::Arrow)) {
      Formula rhs = impl();
      return Formula::connective(FormulaKind::Implies, std::move(lhs), std::move(rhs), cover_to_previous(start));
    }
    return lhs;
  }

  Formula disj() {
    const Span start = peek().span;
    Formula lhs = conj();
    while (at(Tok::Vee) || at(Tok::Or)) {
      next();
      Formula rhs = conj();
      lhs = Formula::connective(FormulaKind::Or, std::move(lhs), std::move(rhs), cover_to_previous(start));
    }
    return lhs;
  }

  Formula conj() {
    const Span start = peek().span;
    Formula lhs = neg();
    while (at(Tok::Wedge) || at(Tok::And)) {
      next();
      Formula rhs = neg();
      lhs = Formula::connective(FormulaKind::And, std::move(lhs), std::move(rhs), cover_to_previous(start));
    }
    return lhs;
  }

  Formula neg() {
    const Span start = peek().span;
    if (at(Tok::Tilde) || at(Tok::Not)) {
      next();
      Formula operand = neg();
      return Formula::negation(std::move(operand), cover_to_previous(start));
    }
    if (at(Tok::Forall) || at(Tok::Exists)) return quant();
    return atom();
  }

  Formula quant() {
    const Span start = peek().span;
    const FormulaKind kind = next().kind == Tok::Forall ? FormulaKind::Forall : FormulaKind::Exists;
    std::string var(expect(Tok::Ident, "a variable name").text);
    expect(Tok::In, "'in'");
    expect(Tok::LBracket, "'['");
    Term lo = term();
    expect(Tok::DotDot, "'..'");
    Term hi = term();
    expect(Tok::RBracket, "']'");
    expect(Tok::Comma, "','");
    Formula body = formula();
    return Formula::quantifier(kind, std::move(var), std::move(lo), std::move(hi), std::move(body),
                               cover_to_previous(start));
  }

  static bool formula_only(Tok kind) {
    switch (kind) {
      case Tok::Eq:
      case Tok::Ne:
      case Tok::Lt:
      case Tok::Le:
      case Tok::Gt:
      case Tok::Ge:
      case Tok::Bar:
      case Tok::Tilde:
      case Tok::Not:
      case Tok::Wedge:
      case Tok::And:
      case Tok::Vee:
      case Tok::Or:
      case Tok::Arrow:
      case Tok::BiArrow:
      case Tok::Forall:
      case Tok::Exists: return true;
      default: return false;
    }
  }

  // With the current token '(', decides whether the group holds a formula
  // (some formula-only token occurs before the matching ')') or a term.
  bool parenthesized_formula_ahead() const {
    int depth = 0;
    for (std::size_t k = pos_; k < tokens_.size(); ++k) {
      const Tok kind = tokens_[k].kind;
      if (kind == Tok::LParen) ++depth;
      if (kind == Tok::RParen && --depth == 0) return false;
      if (formula_only(kind)) return true;
    }
    return false;
  }

  Formula atom() {
    const Span start = peek().span;
    if (at(Tok::LParen) && parenthesized_formula_ahead()) {
      next();
      Formula inner = formula();
      expect(Tok::RParen, "')'");
      return inner;
    }
    Term lhs = term();
    const Tok op = peek().kind;
    const auto compare = [&](CompareOp cmp) {
      next();
      Term rhs = term();
      return Formula::compare(cmp, std::move(lhs), std::move(rhs), cover_to_previous(start));
    };
    switch (op) {
      case Tok::Eq: {
        next();
        Term rhs = term();
        if (accept(Tok::LBracket)) {
          Term modulus = term();
          expect(Tok::RBracket, "']'");
          return Formula::congruent(std::move(lhs), std::move(rhs), std::move(modulus), cover_to_previous(start));
        }
        return Formula::compare(CompareOp::Eq, std::move(lhs), std::move(rhs), cover_to_previous(start));
      }
      case Tok::Ne: return compare(CompareOp::Ne);
      case Tok::Lt: return compare(CompareOp::Lt);
      case Tok::Le: return compare(CompareOp::Le);
      case Tok::Gt: return compare(CompareOp::Gt);
      case Tok::Ge: return compare(CompareOp::Ge);
      case Tok::Bar: {
        next();
        Term rhs = term();
        return Formula::divides(std::move(lhs), std::move(rhs), cover_to_previous(start));
      }
      default: fail("a comparison, '|' or a congruence after the term");
    }
  }

  // ---- terms ----------------------------------------------------------

  Term term() { return addsub(); }

  Term addsub() {
    const Span start = peek().span;
    Term lhs = muldiv();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const TermKind kind = next().kind == Tok::Plus ? TermKind::Add : TermKind::Subtract;
      Term rhs = muldiv();
      lhs = Term::binary(kind, std::move(lhs), std::move(rhs), cover_to_previous(start));
    }
    return lhs;
  }

  Term muldiv() {
    const Span start = peek().span;
    Term lhs = unary();
    while (at(Tok::Star) || at(Tok::Div) || at(Tok::Mod)) {
      const Tok op = next().kind;
      const TermKind kind = op == Tok::Star ? TermKind::Multiply : op == Tok::Div ? TermKind::Divide : TermKind::Modulo;
      Term rhs = unary();
      lhs = Term::binary(kind, std::move(lhs), std::move(rhs), cover_to_previous(start));
    }
    return lhs;
  }

  Term unary() {
    const Span start = peek().span;
    if (accept(Tok::Minus)) {
      Term operand = unary();
      return Term::negate(std::move(operand), cover_to_previous(start));
    }
    return power();
  }

  Term power() {
    const Span start = peek().span;
    Term base = primary();
    if (accept(Tok::Caret)) {
      Term exponent = unary();
      return Term::binary(TermKind::Power, std::move(base), std::move(exponent), cover_to_previous(start));
    }
    return base;
  }

  static std::optional<Builtin> lookup_builtin(std::string_view name) {
    for (Builtin b : {Builtin::Gcd, Builtin::Isqrt, Builtin::Abs, Builtin::Fact, Builtin::Binom})
      if (builtin_name(b) == name) return b;
    return std::nullopt;
  }

  Term primary() {
    const Token& tok = peek();
    const Span start = tok.span;
    if (tok.kind == Tok::Integer) {
      next();
      return Term::literal(parse_int(tok.text), start);
    }
    if (tok.kind == Tok::LParen) {
      next();
      Term inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (tok.kind != Tok::Ident) fail("a term");
    next();
    if (!at(Tok::LParen)) return Term::variable(std::string(tok.text), start);

    if (tok.text == "sum") {
      next();
      std::string var(expect(Tok::Ident, "the summation variable").text);
      expect(Tok::Comma, "','");
      Term lo = term();
      expect(Tok::Comma, "','");
      Term hi = term();
      expect(Tok::Comma, "','");
      Term body = term();
      expect(Tok::RParen, "')'");
      return Term::sum(std::move(var), std::move(lo), std::move(hi), std::move(body), cover_to_previous(start));
    }
    const auto builtin = lookup_builtin(tok.text);
    if (!builtin) throw ParseError(ErrorKind::UnknownBuiltin, start, "no builtin named '" + std::string(tok.text) + "'");
    next();
    std::vector<Term> args;
    args.push_back(term());
    while (accept(Tok::Comma)) args.push_back(term());
    expect(Tok::RParen, "')' or ','");
    const Span span = cover_to_previous(start);
    if (args.size() != builtin_arity(*builtin))
      throw ParseError(ErrorKind::Arity, span,
                       std::string(builtin_name(*builtin)) + " takes " + std::to_string(builtin_arity(*builtin)) +
                           " argument(s), got " + std::to_string(args.size()));
    return Term::call(*builtin, std::move(args), span);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) { return detail::Parser(text).whole_term(); }

inline Formula parse_formula(std::string_view text) { return detail::Parser(text).whole_formula(); }

}  // namespace arith::dsl
