#pragma once

// Syntax trees for the statement language: integer terms and quantified
// formulas over them. Equality of trees compares structure only; source
// spans are ignored.

#include "arith/int.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arith::dsl {

struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

enum class ErrorKind {
  Lexical,
  Syntax,
  UnknownBuiltin,
  Arity,
  UnboundVariable,
  NotResidueCompatible,
  Domain,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Lexical: return "lexical error";
    case ErrorKind::Syntax: return "parse error";
    case ErrorKind::UnknownBuiltin: return "unknown builtin";
    case ErrorKind::Arity: return "arity mismatch";
    case ErrorKind::UnboundVariable: return "unbound variable";
    case ErrorKind::NotResidueCompatible: return "not residue-compatible";
    case ErrorKind::Domain: return "domain error";
  }
  return "error";
}

// An error attached to a location in the source text. what() reads
// "line:column: <kind>: <message>".
class SourceError : public std::runtime_error {
public:
  SourceError(ErrorKind kind, Span span, const std::string& message)
      : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                           std::string(to_string(kind)) + ": " + message),
        kind_(kind), span_(span), message_(message) {}

  ErrorKind kind() const { return kind_; }
  const Span& span() const { return span_; }
  const std::string& message() const { return message_; }

private:
  ErrorKind kind_;
  Span span_;
  std::string message_;
};

// Rejected text: lexing, grammar, builtins, arity, unbound variables.
class ParseError : public SourceError {
public:
  using SourceError::SourceError;
};

// A well-formed statement that cannot be evaluated (negative factorial, ...).
class EvalError : public SourceError {
public:
  using SourceError::SourceError;
};

enum class TermKind { Literal, Variable, Negate, Add, Subtract, Multiply, Divide, Modulo, Power, Call, Sum };

enum class Builtin { Gcd, Isqrt, Abs, Fact, Binom };

inline std::string_view builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Gcd: return "gcd";
    case Builtin::Isqrt: return "isqrt";
    case Builtin::Abs: return "abs";
    case Builtin::Fact: return "fact";
    case Builtin::Binom: return "binom";
  }
  return "?";
}

inline std::size_t builtin_arity(Builtin b) { return (b == Builtin::Gcd || b == Builtin::Binom) ? 2 : 1; }

struct Term {
  TermKind kind = TermKind::Literal;
  Int value;               // Literal
  std::string name;        // Variable; bound variable of Sum
  Builtin builtin{};       // Call
  std::vector<Term> args;  // operands; Sum holds lo, hi, body
  Span span;

  static Term literal(Int v, Span s = {}) {
    Term t;
    t.value = std::move(v);
    t.span = s;
    return t;
  }
  static Term variable(std::string n, Span s = {}) {
    Term t;
    t.kind = TermKind::Variable;
    t.name = std::move(n);
    t.span = s;
    return t;
  }
  static Term negate(Term operand, Span s = {}) {
    Term t;
    t.kind = TermKind::Negate;
    t.args.push_back(std::move(operand));
    t.span = s;
    return t;
  }
  static Term binary(TermKind k, Term lhs, Term rhs, Span s = {}) {
    Term t;
    t.kind = k;
    t.args.push_back(std::move(lhs));
    t.args.push_back(std::move(rhs));
    t.span = s;
    return t;
  }
  static Term call(Builtin b, std::vector<Term> arguments, Span s = {}) {
    Term t;
    t.kind = TermKind::Call;
    t.builtin = b;
    t.args = std::move(arguments);
    t.span = s;
    return t;
  }
  static Term sum(std::string var, Term lo, Term hi, Term body, Span s = {}) {
    Term t;
    t.kind = TermKind::Sum;
    t.name = std::move(var);
    t.args.push_back(std::move(lo));
    t.args.push_back(std::move(hi));
    t.args.push_back(std::move(body));
    t.span = s;
    return t;
  }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.builtin == b.builtin && a.args == b.args;
  }
};

enum class FormulaKind { Compare, Divides, Congruent, Not, And, Or, Implies, Iff, Forall, Exists };

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

inline std::string_view compare_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "<>";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

struct Formula {
  FormulaKind kind = FormulaKind::Compare;
  CompareOp op{};              // Compare
  std::vector<Term> terms;     // Compare: lhs, rhs; Divides: divisor, dividend;
                               // Congruent: lhs, rhs, modulus; quantifiers: lo, hi
  std::string var;             // quantifiers
  std::vector<Formula> parts;  // connectives (one operand for Not); quantifier body
  Span span;

  static Formula compare(CompareOp op, Term lhs, Term rhs, Span s = {}) {
    Formula f;
    f.op = op;
    f.terms.push_back(std::move(lhs));
    f.terms.push_back(std::move(rhs));
    f.span = s;
    return f;
  }
  static Formula divides(Term divisor, Term dividend, Span s = {}) {
    Formula f;
    f.kind = FormulaKind::Divides;
    f.terms.push_back(std::move(divisor));
    f.terms.push_back(std::move(dividend));
    f.span = s;
    return f;
  }
  static Formula congruent(Term lhs, Term rhs, Term modulus, Span s = {}) {
    Formula f;
    f.kind = FormulaKind::Congruent;
    f.terms.push_back(std::move(lhs));
    f.terms.push_back(std::move(rhs));
    f.terms.push_back(std::move(modulus));
    f.span = s;
    return f;
  }
  static Formula negation(Formula operand, Span s = {}) {
    Formula f;
    f.kind = FormulaKind::Not;
    f.parts.push_back(std::move(operand));
    f.span = s;
    return f;
  }
  static Formula connective(FormulaKind k, Formula lhs, Formula rhs, Span s = {}) {
    Formula f;
    f.kind = k;
    f.parts.push_back(std::move(lhs));
    f.parts.push_back(std::move(rhs));
    f.span = s;
    return f;
  }
  static Formula quantifier(FormulaKind k, std::string var, Term lo, Term hi, Formula body, Span s = {}) {
    Formula f;
    f.kind = k;
    f.var = std::move(var);
    f.terms.push_back(std::move(lo));
    f.terms.push_back(std::move(hi));
    f.parts.push_back(std::move(body));
    f.span = s;
    return f;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.kind == b.kind && a.op == b.op && a.terms == b.terms && a.var == b.var && a.parts == b.parts;
  }
};

}  // namespace arith::dsl
