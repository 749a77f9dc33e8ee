#pragma once

// Residue tables: the values of a polynomial expression on a full
// residue system 0..m-1, and decisions about which residues can occur.
//
// Only the polynomial fragment is admitted (literals, the variable, +,
// -, *, and ^ with a constant natural exponent), because only there does
// x = y (mod m) imply expr(x) = expr(y) (mod m).

#include "arith/dsl/ast.hpp"
#include "arith/dsl/eval.hpp"
#include "arith/dsl/printer.hpp"
#include "arith/int.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arith {

inline constexpr long kMaxResidueModulus = 1'000'000;

struct ResidueRow {
  Int modulus;
  std::string var;
  dsl::Term expr;
  std::vector<Int> values;  // values[r] = expr(r) mod modulus
};

struct ResidueSet {
  Int modulus;
  std::vector<Int> members;  // ascending, within 0..modulus-1

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

namespace detail {

inline bool is_closed(const dsl::Term& t) {
  if (t.kind == dsl::TermKind::Variable) return false;
  return std::all_of(t.args.begin(), t.args.end(), [](const dsl::Term& a) { return is_closed(a); });
}

[[noreturn]] inline void reject_node(const dsl::Term& t, const std::string& what) {
  throw dsl::ParseError(dsl::ErrorKind::NotResidueCompatible, t.span,
                        what + " in '" + dsl::to_string(t) + "' does not preserve congruences");
}

inline void require_residue_compatible(const dsl::Term& t, std::string_view var) {
  using dsl::TermKind;
  const auto reject = [&](const std::string& what) { reject_node(t, what); };
  switch (t.kind) {
    case TermKind::Literal: return;
    case TermKind::Variable:
      if (t.name != var) reject("variable '" + t.name + "'");
      return;
    case TermKind::Negate:
    case TermKind::Add:
    case TermKind::Subtract:
    case TermKind::Multiply:
      for (const auto& a : t.args) require_residue_compatible(a, var);
      return;
    case TermKind::Power:
      require_residue_compatible(t.args[0], var);
      if (!is_closed(t.args[1])) reject("a non-constant exponent");
      return;
    case TermKind::Divide: reject_node(t, "'div'");
    case TermKind::Modulo: reject_node(t, "'mod'");
    case TermKind::Call: reject_node(t, std::string(dsl::builtin_name(t.builtin)) + "()");
    case TermKind::Sum: reject_node(t, "sum()");
  }
}

// expr(r) reduced modulo m (m > 1), reducing after every operation.
inline Int eval_residue(const dsl::Term& t, const Int& r, const Int& m) {
  using dsl::TermKind;
  switch (t.kind) {
    case TermKind::Literal: return floor_mod(t.value, m);
    case TermKind::Variable: return r;
    case TermKind::Negate: return floor_mod(-eval_residue(t.args[0], r, m), m);
    case TermKind::Add: return floor_mod(eval_residue(t.args[0], r, m) + eval_residue(t.args[1], r, m), m);
    case TermKind::Subtract: return floor_mod(eval_residue(t.args[0], r, m) - eval_residue(t.args[1], r, m), m);
    case TermKind::Multiply: return floor_mod(eval_residue(t.args[0], r, m) * eval_residue(t.args[1], r, m), m);
    case TermKind::Power: {
      const Int exponent = dsl::eval_term(t.args[1], dsl::Env{});
      if (exponent < 0)
        throw dsl::EvalError(dsl::ErrorKind::Domain, t.args[1].span, "exponent must be nonnegative, got " + exponent.str());
      return mod_pow(eval_residue(t.args[0], r, m), exponent, m);
    }
    default: throw std::logic_error("eval_residue: term outside the polynomial fragment");
  }
}

inline void require_modulus(const Int& m) {
  if (m <= 1 || m > kMaxResidueModulus)
    throw DomainError("residue modulus must lie in 2.." + std::to_string(kMaxResidueModulus) + ", got " + m.str());
}

}  // namespace detail

inline ResidueRow residue_row(const dsl::Term& expr, std::string_view var, const Int& m) {
  detail::require_modulus(m);
  detail::require_residue_compatible(expr, var);
  ResidueRow row{m, std::string(var), expr, {}};
  const auto size = m.convert_to<std::size_t>();
  row.values.reserve(size);
  for (Int r = 0; r < m; ++r) row.values.push_back(detail::eval_residue(expr, r, m));
  return row;
}

inline ResidueSet image_of(const ResidueRow& row) {
  std::vector<Int> members = row.values;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {row.modulus, std::move(members)};
}

inline ResidueSet residue_image(const dsl::Term& expr, std::string_view var, const Int& m) {
  return image_of(residue_row(expr, var, m));
}

inline ResidueSet intersect(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument("intersect: moduli differ (" + a.modulus.str() + " vs " + b.modulus.str() + ")");
  ResidueSet out{a.modulus, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

inline std::string to_string(const ResidueSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) out += (i ? ", " : "") + s.members[i].str();
  return out + "}";
}

// Row label "<expr> (mod m)", header labelled with the variable names.
//
//   x           0 1 2 3 4 5 6
//   x^2 (mod 7) 0 1 4 2 2 4 1
inline std::string render_table(std::span<const ResidueRow> rows, const Int& modulus) {
  std::vector<std::string> vars;
  std::vector<std::string> labels;
  for (const auto& row : rows) {
    if (row.modulus != modulus)
      throw std::invalid_argument("render_table: row modulus " + row.modulus.str() + " differs from " + modulus.str());
    if (std::find(vars.begin(), vars.end(), row.var) == vars.end()) vars.push_back(row.var);
    labels.push_back(dsl::to_string(row.expr) + " (mod " + modulus.str() + ")");
  }
  std::string header_label;
  for (const auto& v : vars) header_label += (header_label.empty() ? "" : ", ") + v;

  std::size_t label_width = header_label.size();
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  const std::size_t cell = Int(modulus - 1).str().size();

  const auto pad = [](std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
  };
  const auto line = [&](const std::string& label, const auto& cells) {
    std::string s = label + std::string(label_width - label.size(), ' ');
    for (const auto& c : cells) s += (s.empty() ? "" : " ") + pad(c.str(), cell);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };

  std::vector<Int> residues;
  for (Int r = 0; r < modulus; ++r) residues.push_back(r);
  std::string out = line(header_label, residues);
  for (std::size_t i = 0; i < rows.size(); ++i) out += line(labels[i], rows[i].values);
  return out;
}

}  // namespace arith
