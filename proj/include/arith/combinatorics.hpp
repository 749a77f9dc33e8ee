#pragma once

// Finite sums, factorials and binomial coefficients over the naturals.
//
// binom follows Pascal's rule:
//   binom(n, 0) = 1,  binom(0, k+1) = 0,
//   binom(n+1, k+1) = binom(n, k) + binom(n, k+1).
// The factorial quotient is kept as a checked second route.

#include "arith/int.hpp"

#include <concepts>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace arith {

// A nonnegative Int. Subtraction is truncated: a - b = 0 when a < b.
// Division and remainder follow the floor conventions of int.hpp.
class Nat {
public:
  Nat() = default;
  Nat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Nat(Int v) : value_(std::move(v)) {
    if (value_ < 0) throw DomainError("Nat: negative value " + value_.str());
  }

  const Int& value() const { return value_; }
  std::string str() const { return value_.str(); }

  Nat& operator+=(const Nat& o) {
    value_ += o.value_;
    return *this;
  }
  Nat& operator*=(const Nat& o) {
    value_ *= o.value_;
    return *this;
  }
  Nat& operator++() {
    ++value_;
    return *this;
  }

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator-(const Nat& a, const Nat& b) { return a < b ? Nat{} : Nat(Int{a.value_ - b.value_}); }
  friend Nat operator/(const Nat& a, const Nat& b) { return Nat(floor_div(a.value_, b.value_)); }
  friend Nat operator%(const Nat& a, const Nat& b) { return Nat(floor_mod(a.value_, b.value_)); }

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend bool operator<(const Nat& a, const Nat& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Nat& a, const Nat& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Nat& a, const Nat& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Nat& a, const Nat& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.value_; }

private:
  Int value_ = 0;
};

template <class F>
concept NatFunction = std::invocable<F&, const Nat&> && std::convertible_to<std::invoke_result_t<F&, const Nat&>, Nat>;

// f(a) + f(a+1) + ... + f(a+n-1), accumulated in that order; 0 when n = 0.
template <NatFunction F>
Nat sum_n(const Nat& a, const Nat& n, F&& f) {
  Nat total;
  for (Nat i = 0; i < n; ++i) total += Nat(f(a + i));
  return total;
}

// f(a) + ... + f(b) with both bounds included; 0 when a > b.
template <NatFunction F>
Nat sum_range(const Nat& a, const Nat& b, F&& f) {
  if (a <= b) return sum_n(a, b - a + 1, std::forward<F>(f));
  return Nat{};
}

// 1 * 2 * ... * n, with 0! = 1.
inline Nat fact(const Nat& n) {
  Int product = 1;
  for (Int i = 1; i <= n.value(); ++i) product *= i;
  return Nat(std::move(product));
}

namespace detail {

// Rows of Pascal's triangle up to a fixed height, built on demand and
// shared across threads. Taller rows are computed per call.
class PascalTable {
public:
  static constexpr std::size_t kMaxCachedRow = 256;

  static PascalTable& instance() {
    static PascalTable table;
    return table;
  }

  Int get(std::size_t n, std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      std::vector<Int> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = prev[j - 1] + prev[j];
      rows_.push_back(std::move(next));
    }
    return rows_[n][k];
  }

private:
  PascalTable() : rows_{{Int{1}}} {}

  std::shared_mutex mutex_;
  std::vector<std::vector<Int>> rows_;
};

// Pascal's rule run row by row, keeping only columns 0..k.
inline Int binom_by_rows(const Int& n, std::size_t k) {
  std::vector<Int> row(k + 1, Int{0});
  row[0] = 1;
  for (Int i = 1; i <= n; ++i) {
    for (std::size_t j = k; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

}  // namespace detail

inline Nat binom(const Nat& n, const Nat& k) {
  if (n < k) return Nat{};
  // k <= n from here; n may still exceed the cached height.
  if (n.value() < detail::PascalTable::kMaxCachedRow) {
    const auto row = n.value().convert_to<std::size_t>();
    return Nat(detail::PascalTable::instance().get(row, k.value().convert_to<std::size_t>()));
  }
  if (k.value() > std::numeric_limits<std::uint32_t>::max())
    throw DomainError("binom: column " + k.str() + " is too large to tabulate");
  return Nat(detail::binom_by_rows(n.value(), k.value().convert_to<std::size_t>()));
}

// n! / (k! (n-k)!) for k <= n. The division must be exact.
inline Nat binom_fact(const Nat& n, const Nat& k) {
  if (k > n) throw DomainError("binom_fact: k = " + k.str() + " exceeds n = " + n.str());
  const Int numerator = fact(n).value();
  const Int denominator = fact(k).value() * fact(n - k).value();
  Int q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) throw std::logic_error("binom_fact: inexact factorial quotient for n = " + n.str() + ", k = " + k.str());
  return Nat(std::move(q));
}

inline std::vector<Nat> pascal_row(const Nat& n) {
  std::vector<Nat> row;
  for (Nat k = 0; k <= n; ++k) row.push_back(binom(n, k));
  return row;
}

}  // namespace arith
