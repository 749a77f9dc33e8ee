#pragma once

// Bounded checking of statements: exhaustive evaluation over declared
// finite domains, answering either "verified on this domain" or a
// concrete counterexample.
//
// Free variables are treated as outer universals over the default
// domain, in order of first occurrence. Together with the formula's
// leading chain of universal quantifiers they form the search prefix;
// the counterexample is the first failing prefix assignment in
// lexicographic (nesting) order.

#include "arith/divisibility.hpp"
#include "arith/dsl/ast.hpp"
#include "arith/dsl/eval.hpp"
#include "arith/dsl/printer.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arith::dsl {

// Closed interval used for unbound outer universals.
struct Domain {
  Int lo = -100;
  Int hi = 100;

  friend bool operator==(const Domain&, const Domain&) = default;
};

enum class Verdict { VerifiedOnDomain, Refuted };

inline std::string_view to_string(Verdict v) { return v == Verdict::VerifiedOnDomain ? "verified" : "refuted"; }

// One searched variable; bounds are rendered as written, since an inner
// bound may refer to outer variables.
struct SearchedVariable {
  std::string name;
  std::string lo;
  std::string hi;
  bool implicit = false;  // free variable given the default domain

  friend bool operator==(const SearchedVariable&, const SearchedVariable&) = default;
};

using Assignment = std::vector<std::pair<std::string, Int>>;

struct CheckResult {
  Verdict verdict = Verdict::VerifiedOnDomain;
  std::vector<SearchedVariable> domain;
  std::optional<Assignment> counterexample;  // present iff Refuted
  std::uint64_t assignments = 0;             // prefix assignments whose body was evaluated

  std::string domain_text() const {
    std::string s;
    for (const auto& v : domain) {
      if (!s.empty()) s += ", ";
      s += v.name + " in [" + v.lo + ".." + v.hi + "]";
    }
    return s;
  }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

inline std::string to_string(const Assignment& a) {
  std::string s;
  for (const auto& [name, value] : a) {
    if (!s.empty()) s += ", ";
    s += name + " = " + value.str();
  }
  return s;
}

namespace detail {

class FreeVariables {
public:
  std::vector<std::string> found;

  void term(const Term& t) {
    switch (t.kind) {
      case TermKind::Variable: note(t.name); return;
      case TermKind::Sum:
        term(t.args[0]);
        term(t.args[1]);
        bound_.push_back(t.name);
        term(t.args[2]);
        bound_.pop_back();
        return;
      default:
        for (const Term& a : t.args) term(a);
    }
  }

  void formula(const Formula& f) {
    if (f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists) {
      term(f.terms[0]);
      term(f.terms[1]);
      bound_.push_back(f.var);
      formula(f.parts[0]);
      bound_.pop_back();
      return;
    }
    for (const Term& t : f.terms) term(t);
    for (const Formula& p : f.parts) formula(p);
  }

private:
  void note(const std::string& name) {
    if (std::find(bound_.begin(), bound_.end(), name) != bound_.end()) return;
    if (std::find(found.begin(), found.end(), name) == found.end()) found.push_back(name);
  }

  std::vector<std::string> bound_;
};

struct PrefixLevel {
  std::string name;
  const Term* lo = nullptr;  // null for implicit levels
  const Term* hi = nullptr;
};

class PrefixSearch {
public:
  PrefixSearch(std::vector<PrefixLevel> levels, const Formula& matrix, const Domain& defaults)
      : levels_(std::move(levels)), matrix_(matrix), defaults_(defaults) {}

  CheckResult run() {
    CheckResult result;
    for (const auto& level : levels_) {
      if (level.lo == nullptr) {
        result.domain.push_back({level.name, defaults_.lo.str(), defaults_.hi.str(), true});
      } else {
        result.domain.push_back({level.name, to_string(*level.lo), to_string(*level.hi), false});
      }
    }
    if (!search(0)) {
      result.verdict = Verdict::Refuted;
      Assignment witness;
      for (const auto& [name, value] : env_.bindings()) witness.emplace_back(name, value);
      result.counterexample = std::move(witness);
    }
    result.assignments = assignments_;
    return result;
  }

private:
  // False as soon as a failing assignment is found; env_ then holds it.
  bool search(std::size_t depth) {
    if (depth == levels_.size()) {
      ++assignments_;
      return eval_formula(matrix_, env_);
    }
    const PrefixLevel& level = levels_[depth];
    Int lo = level.lo == nullptr ? defaults_.lo : eval_term(*level.lo, env_);
    const Int hi = level.hi == nullptr ? defaults_.hi : eval_term(*level.hi, env_);
    if (lo > hi) return true;
    const std::size_t slot = env_.size();
    env_.push(level.name, std::move(lo));
    for (; env_.at(slot) <= hi; ++env_.at(slot))
      if (!search(depth + 1)) return false;
    env_.pop();
    return true;
  }

  std::vector<PrefixLevel> levels_;
  const Formula& matrix_;
  Domain defaults_;
  Env env_;
  std::uint64_t assignments_ = 0;
};

}  // namespace detail

// Free variables of a formula or term, in order of first occurrence.
inline std::vector<std::string> free_variables(const Formula& f) {
  detail::FreeVariables fv;
  fv.formula(f);
  return fv.found;
}

inline std::vector<std::string> free_variables(const Term& t) {
  detail::FreeVariables fv;
  fv.term(t);
  return fv.found;
}

inline CheckResult bounded_check(const Formula& f, const Domain& defaults = {}) {
  if (defaults.lo > defaults.hi)
    throw std::invalid_argument("bounded_check: empty default domain [" + defaults.lo.str() + ".." +
                                defaults.hi.str() + "]");
  std::vector<detail::PrefixLevel> levels;
  for (auto& name : free_variables(f)) levels.push_back({std::move(name), nullptr, nullptr});
  const Formula* matrix = &f;
  while (matrix->kind == FormulaKind::Forall) {
    levels.push_back({matrix->var, &matrix->terms[0], &matrix->terms[1]});
    matrix = &matrix->parts[0];
  }
  return detail::PrefixSearch(std::move(levels), *matrix, defaults).run();
}

// Evaluates f at a prefix assignment as reported in a counterexample:
// free variables first, then the leading universals, each checked
// against its bounds.
inline bool holds_at(const Formula& f, const Assignment& assignment) {
  Env env;
  std::size_t next = 0;
  const auto take = [&](const std::string& name) -> const Int& {
    if (next >= assignment.size() || assignment[next].first != name)
      throw std::invalid_argument("holds_at: assignment does not bind '" + name + "' in prefix order");
    return assignment[next++].second;
  };
  for (const auto& name : free_variables(f)) env.push(name, take(name));
  const Formula* matrix = &f;
  while (matrix->kind == FormulaKind::Forall && next < assignment.size()) {
    const Int lo = eval_term(matrix->terms[0], env);
    const Int hi = eval_term(matrix->terms[1], env);
    const Int& value = take(matrix->var);
    if (value < lo || value > hi)
      throw std::invalid_argument("holds_at: " + matrix->var + " = " + value.str() + " is outside its bounds");
    env.push(matrix->var, value);
    matrix = &matrix->parts[0];
  }
  if (next != assignment.size()) throw std::invalid_argument("holds_at: assignment has unused bindings");
  return eval_formula(*matrix, env);
}

// All x in [lo, hi] satisfying a formula with exactly one free variable.
inline std::vector<Int> find_all_dsl(const Formula& f, const Int& lo, const Int& hi) {
  const auto vars = free_variables(f);
  if (vars.size() != 1) {
    std::string listed;
    for (const auto& v : vars) listed += (listed.empty() ? "" : ", ") + v;
    throw std::invalid_argument("find_all: expected exactly one free variable, found " +
                                std::to_string(vars.size()) + (listed.empty() ? "" : " (" + listed + ")"));
  }
  Env env;
  env.push(vars.front(), 0);
  return find_all(
      [&](const Int& x) {
        env.at(0) = x;
        return eval_formula(f, env);
      },
      lo, hi);
}

}  // namespace arith::dsl
