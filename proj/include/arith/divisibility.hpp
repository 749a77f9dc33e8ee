#pragma once

#include "arith/int.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arith {

// dividend = divisor * cofactor.
struct DividesWitness {
  Int divisor;
  Int dividend;
  Int cofactor;

  friend bool operator==(const DividesWitness&, const DividesWitness&) = default;
};

// g = u*a + v*b, g = gcd(a, b) >= 0.
struct BezoutCert {
  Int a;
  Int b;
  Int g;
  Int u;
  Int v;

  friend bool operator==(const BezoutCert&, const BezoutCert&) = default;
};

// b | a, decided by the remainder and witnessed by the quotient.
// 0 | a holds only for a = 0, with cofactor 0.
inline std::optional<DividesWitness> divides(const Int& b, const Int& a) {
  auto [q, r] = divmod(a, b);
  if (r != 0) return std::nullopt;
  return DividesWitness{b, a, std::move(q)};
}

inline bool is_divisor(const Int& b, const Int& a) { return floor_mod(a, b) == 0; }

inline Int gcd(const Int& a, const Int& b) {
  Int x = abs(a);
  Int y = abs(b);
  while (y != 0) {
    Int r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline BezoutCert ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) return {a, b, 0, 0, 0};
  // Invariant: old_r = old_u*|a| + old_v*|b|, r = u*|a| + v*|b|.
  Int old_r = abs(a), r = abs(b);
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_u = std::exchange(u, old_u - q * u);
    old_v = std::exchange(v, old_v - q * v);
  }
  if (a < 0) old_u = -old_u;
  if (b < 0) old_v = -old_v;
  return {a, b, std::move(old_r), std::move(old_u), std::move(old_v)};
}

inline std::vector<Int> positive_divisors(const Int& n) {
  if (n == 0) throw DomainError("positive_divisors: every integer divides 0");
  const Int m = abs(n);
  std::vector<Int> low, high;
  const Int root = isqrt(m);
  for (Int d = 1; d <= root; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    Int co = m / d;
    if (co != d) high.push_back(std::move(co));
  }
  low.insert(low.end(), std::make_move_iterator(high.rbegin()), std::make_move_iterator(high.rend()));
  return low;
}

// Every x in [lo, hi] with pred(x), ascending. The interval is the
// caller's promise that no solution lies outside it.
template <class Pred>
std::vector<Int> find_all(Pred&& pred, const Int& lo, const Int& hi) {
  if (lo > hi) throw std::invalid_argument("find_all: empty interval [" + lo.str() + ".." + hi.str() + "]");
  std::vector<Int> found;
  for (Int x = lo; x <= hi; ++x)
    if (pred(std::as_const(x))) found.push_back(x);
  return found;
}

}  // namespace arith
