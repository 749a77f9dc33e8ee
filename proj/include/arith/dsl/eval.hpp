#pragma once

// Exact evaluation of terms and formulas.
//
// Division and remainder use the floor conventions (a div 0 = 0,
// a mod 0 = a). fact, binom, isqrt and exponents need nonnegative
// arguments; violations are EvalErrors, never silently false.
// Quantifiers and sums enumerate their closed integer interval.

#include "arith/combinatorics.hpp"
#include "arith/divisibility.hpp"
#include "arith/dsl/ast.hpp"
#include "arith/int.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arith::dsl {

// Variable bindings; later bindings shadow earlier ones.
class Env {
public:
  Env() = default;
  Env(std::initializer_list<std::pair<std::string, Int>> bindings) : bindings_(bindings) {}

  void push(std::string name, Int value) { bindings_.emplace_back(std::move(name), std::move(value)); }
  void pop() { bindings_.pop_back(); }
  Int& at(std::size_t index) { return bindings_[index].second; }

  const Int* find(std::string_view name) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  bool binds(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<std::pair<std::string, Int>>& bindings() const { return bindings_; }

private:
  std::vector<std::pair<std::string, Int>> bindings_;
};

namespace detail {

template <class F>
decltype(auto) with_span(const Span& span, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw EvalError(ErrorKind::Domain, span, e.what());
  }
}

inline const Int& require_nonnegative(const Int& v, const Span& span, const char* what) {
  if (v < 0) throw EvalError(ErrorKind::Domain, span, std::string(what) + " must be nonnegative, got " + v.str());
  return v;
}

// RAII binding of one variable for the duration of a scope.
class Binding {
public:
  Binding(Env& env, const std::string& name, Int value) : env_(env), index_(env.size()) {
    env_.push(name, std::move(value));
  }
  ~Binding() { env_.pop(); }
  Binding(const Binding&) = delete;
  Binding& operator=(const Binding&) = delete;

  // Re-fetched on every call: nested bindings may reallocate the storage.
  Int& value() { return env_.at(index_); }

private:
  Env& env_;
  std::size_t index_;
};

}  // namespace detail

inline Int eval_term(const Term& t, Env& env);

inline Int eval_term(const Term& t, const Env& env) {
  Env copy = env;
  return eval_term(t, copy);
}

inline Int eval_term(const Term& t, Env& env) {
  const auto arg = [&](std::size_t i) { return eval_term(t.args[i], env); };
  switch (t.kind) {
    case TermKind::Literal: return t.value;
    case TermKind::Variable: {
      const Int* v = env.find(t.name);
      if (v == nullptr) throw ParseError(ErrorKind::UnboundVariable, t.span, "'" + t.name + "' is not bound");
      return *v;
    }
    case TermKind::Negate: return -arg(0);
    case TermKind::Add: return arg(0) + arg(1);
    case TermKind::Subtract: return arg(0) - arg(1);
    case TermKind::Multiply: return arg(0) * arg(1);
    case TermKind::Divide: {
      Int a = arg(0);
      return floor_div(a, arg(1));
    }
    case TermKind::Modulo: {
      const Term& lhs = t.args[0];
      if (lhs.kind == TermKind::Power) {
        // (x ^ e) mod m without building x ^ e.
        Int base = eval_term(lhs.args[0], env);
        Int exponent = eval_term(lhs.args[1], env);
        detail::require_nonnegative(exponent, lhs.span, "exponent");
        Int modulus = arg(1);
        if (modulus != 0) return mod_pow(base, exponent, modulus);
        return detail::with_span(lhs.span, [&] { return pow(base, exponent); });
      }
      Int a = arg(0);
      return floor_mod(a, arg(1));
    }
    case TermKind::Power: {
      Int base = arg(0);
      Int exponent = arg(1);
      detail::require_nonnegative(exponent, t.span, "exponent");
      return detail::with_span(t.span, [&] { return pow(base, exponent); });
    }
    case TermKind::Call: {
      switch (t.builtin) {
        case Builtin::Gcd: {
          Int a = arg(0);
          return gcd(a, arg(1));
        }
        case Builtin::Abs: return abs(arg(0));
        case Builtin::Isqrt: return isqrt(detail::require_nonnegative(arg(0), t.args[0].span, "isqrt argument"));
        case Builtin::Fact: {
          Int n = arg(0);
          return fact(Nat(detail::require_nonnegative(n, t.args[0].span, "fact argument"))).value();
        }
        case Builtin::Binom: {
          Int n = arg(0);
          detail::require_nonnegative(n, t.args[0].span, "binom argument");
          Int k = arg(1);
          detail::require_nonnegative(k, t.args[1].span, "binom argument");
          return detail::with_span(t.span, [&] { return binom(Nat(n), Nat(k)).value(); });
        }
      }
      break;
    }
    case TermKind::Sum: {
      Int lo = arg(0);
      const Int hi = arg(1);
      Int total = 0;
      if (lo > hi) return total;
      detail::Binding bound(env, t.name, std::move(lo));
      for (; bound.value() <= hi; ++bound.value()) total += eval_term(t.args[2], env);
      return total;
    }
  }
  throw std::logic_error("eval_term: unknown term kind");
}

inline bool eval_formula(const Formula& f, Env& env);

inline bool eval_formula(const Formula& f, const Env& env) {
  Env copy = env;
  return eval_formula(f, copy);
}

inline bool eval_formula(const Formula& f, Env& env) {
  const auto term = [&](std::size_t i) { return eval_term(f.terms[i], env); };
  switch (f.kind) {
    case FormulaKind::Compare: {
      const Int a = term(0);
      const Int b = term(1);
      switch (f.op) {
        case CompareOp::Eq: return a == b;
        case CompareOp::Ne: return a != b;
        case CompareOp::Lt: return a < b;
        case CompareOp::Le: return a <= b;
        case CompareOp::Gt: return a > b;
        case CompareOp::Ge: return a >= b;
      }
      break;
    }
    case FormulaKind::Divides: {
      // floor_mod(a, 0) = a, so 0 | a exactly when a = 0.
      const Int d = term(0);
      return is_divisor(d, term(1));
    }
    case FormulaKind::Congruent: {
      const Int a = term(0);
      const Int b = term(1);
      return is_divisor(term(2), a - b);
    }
    case FormulaKind::Not: return !eval_formula(f.parts[0], env);
    case FormulaKind::And: return eval_formula(f.parts[0], env) && eval_formula(f.parts[1], env);
    case FormulaKind::Or: return eval_formula(f.parts[0], env) || eval_formula(f.parts[1], env);
    case FormulaKind::Implies: return !eval_formula(f.parts[0], env) || eval_formula(f.parts[1], env);
    case FormulaKind::Iff: {
      const bool a = eval_formula(f.parts[0], env);
      return a == eval_formula(f.parts[1], env);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const bool universal = f.kind == FormulaKind::Forall;
      Int lo = term(0);
      const Int hi = term(1);
      if (lo > hi) return universal;
      detail::Binding bound(env, f.var, std::move(lo));
      for (; bound.value() <= hi; ++bound.value())
        if (eval_formula(f.parts[0], env) != universal) return !universal;
      return universal;
    }
  }
  throw std::logic_error("eval_formula: unknown formula kind");
}

}  // namespace arith::dsl
