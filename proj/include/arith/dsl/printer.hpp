#pragma once

// Renders trees back to concrete syntax with the fewest parentheses the
// grammar needs, so that parse(print(x)) == x.

#include "arith/dsl/ast.hpp"

#include <string>

namespace arith::dsl {

namespace detail {

// Term precedence levels, loosest first.
enum TermLevel { kAddSub = 1, kMulDiv = 2, kUnary = 3, kPower = 4, kPrimary = 5 };

inline int term_level(const Term& t) {
  switch (t.kind) {
    case TermKind::Add:
    case TermKind::Subtract: return kAddSub;
    case TermKind::Multiply:
    case TermKind::Divide:
    case TermKind::Modulo: return kMulDiv;
    case TermKind::Negate: return kUnary;
    case TermKind::Power: return kPower;
    case TermKind::Literal: return t.value < 0 ? kUnary : kPrimary;
    default: return kPrimary;
  }
}

inline void print_term(const Term& t, std::string& out);

inline void print_operand(const Term& t, int min_level, std::string& out) {
  const bool parens = term_level(t) < min_level;
  if (parens) out += '(';
  print_term(t, out);
  if (parens) out += ')';
}

inline void print_term(const Term& t, std::string& out) {
  const auto infix = [&](const char* op, int lhs_level, int rhs_level) {
    print_operand(t.args[0], lhs_level, out);
    out += op;
    print_operand(t.args[1], rhs_level, out);
  };
  switch (t.kind) {
    case TermKind::Literal:
      if (t.value < 0) {
        out += "-" + Int{-t.value}.str();
      } else {
        out += t.value.str();
      }
      return;
    case TermKind::Variable: out += t.name; return;
    case TermKind::Negate:
      out += '-';
      print_operand(t.args[0], kUnary, out);
      return;
    case TermKind::Add: infix(" + ", kAddSub, kMulDiv); return;
    case TermKind::Subtract: infix(" - ", kAddSub, kMulDiv); return;
    case TermKind::Multiply: infix(" * ", kMulDiv, kUnary); return;
    case TermKind::Divide: infix(" div ", kMulDiv, kUnary); return;
    case TermKind::Modulo: infix(" mod ", kMulDiv, kUnary); return;
    case TermKind::Power: infix("^", kPrimary, kUnary); return;
    case TermKind::Call:
      out += builtin_name(t.builtin);
      out += '(';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i != 0) out += ", ";
        print_term(t.args[i], out);
      }
      out += ')';
      return;
    case TermKind::Sum:
      out += "sum(" + t.name;
      for (const Term& a : t.args) {
        out += ", ";
        print_term(a, out);
      }
      out += ')';
      return;
  }
}

// Formula precedence levels, loosest first.
enum FormulaLevel { kIff = 1, kImpl = 2, kDisj = 3, kConj = 4, kNeg = 5 };

inline int formula_level(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Iff: return kIff;
    case FormulaKind::Implies: return kImpl;
    case FormulaKind::Or: return kDisj;
    case FormulaKind::And: return kConj;
    default: return kNeg;
  }
}

// A quantifier body extends as far right as possible, so a quantifier
// needs parentheses unless nothing follows it.
inline void print_formula(const Formula& f, int min_level, bool rightmost, std::string& out) {
  const bool is_quant = f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists;
  const bool parens = formula_level(f) < min_level || (is_quant && !rightmost);
  if (parens) {
    out += '(';
    print_formula(f, kIff, true, out);
    out += ')';
    return;
  }
  const auto infix = [&](const char* op, int lhs_level, int rhs_level) {
    print_formula(f.parts[0], lhs_level, false, out);
    out += op;
    print_formula(f.parts[1], rhs_level, rightmost, out);
  };
  switch (f.kind) {
    case FormulaKind::Compare:
      print_term(f.terms[0], out);
      out += ' ';
      out += compare_symbol(f.op);
      out += ' ';
      print_term(f.terms[1], out);
      return;
    case FormulaKind::Divides:
      print_term(f.terms[0], out);
      out += " | ";
      print_term(f.terms[1], out);
      return;
    case FormulaKind::Congruent:
      print_term(f.terms[0], out);
      out += " = ";
      print_term(f.terms[1], out);
      out += " [";
      print_term(f.terms[2], out);
      out += ']';
      return;
    case FormulaKind::Not:
      out += '~';
      print_formula(f.parts[0], kNeg, rightmost, out);
      return;
    case FormulaKind::And: infix(" /\\ ", kConj, kNeg); return;
    case FormulaKind::Or: infix(" \\/ ", kDisj, kConj); return;
    case FormulaKind::Implies: infix(" -> ", kDisj, kImpl); return;
    case FormulaKind::Iff: infix(" <-> ", kIff, kImpl); return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.kind == FormulaKind::Forall ? "forall " : "exists ";
      out += f.var + " in [";
      print_term(f.terms[0], out);
      out += "..";
      print_term(f.terms[1], out);
      out += "], ";
      print_formula(f.parts[0], kIff, true, out);
      return;
  }
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::string out;
  detail::print_term(t, out);
  return out;
}

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(f, detail::kIff, true, out);
  return out;
}

}  // namespace arith::dsl
