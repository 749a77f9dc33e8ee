#pragma once

// Primality by trial division up to the integer square root, plus the
// two alternative characterizations as literal finite checks.
//
// Negative numbers, 0 and 1 are not prime.

#include "arith/int.hpp"

#include <cstdint>
#include <optional>

namespace arith {

struct PrimalityVerdict {
  Int n;
  bool is_prime = false;
  std::optional<Int> smallest_factor;  // set iff n > 1 is composite

  explicit operator bool() const { return is_prime; }
};

namespace detail {

inline bool fits_int64(const Int& n) {
  return n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max();
}

// Smallest d in 2..isqrt(n) dividing n, or 0 when there is none.
template <class I>
I smallest_factor_upto_sqrt(const I& n, const I& root) {
  for (I d = 2; d <= root; ++d)
    if (n % d == 0) return d;
  return I{0};
}

}  // namespace detail

inline PrimalityVerdict is_prime(const Int& n) {
  PrimalityVerdict verdict{n, false, std::nullopt};
  if (n <= 1) return verdict;
  const Int root = isqrt(n);
  Int factor;
  if (detail::fits_int64(n)) {
    factor = detail::smallest_factor_upto_sqrt(n.convert_to<std::int64_t>(), root.convert_to<std::int64_t>());
  } else {
    factor = detail::smallest_factor_upto_sqrt(n, root);
  }
  if (factor == 0) {
    verdict.is_prime = true;
  } else {
    verdict.smallest_factor = std::move(factor);
  }
  return verdict;
}

// 1 < p and every divisor a of p is one of -1, 1, p, -p.
// Divisors of p != 0 satisfy |a| <= |p|, so a in -p..p is exhaustive.
inline bool characterization_strict_divisors(const Int& p) {
  if (p <= 1) return false;
  const auto check = [](auto q) {
    using I = decltype(q);
    for (I a = -q; a <= q; ++a) {
      if (a == 0 || q % a != 0) continue;
      if (a != -1 && a != 1 && a != q && a != -q) return false;
    }
    return true;
  };
  return detail::fits_int64(p) ? check(p.convert_to<std::int64_t>()) : check(p);
}

// 1 < p and no a with 1 < a <= isqrt(p) divides p.
inline bool characterization_below_sqrt(const Int& p) {
  if (p <= 1) return false;
  const Int root = isqrt(p);
  for (Int a = 2; a <= root; ++a)
    if (floor_mod(p, a) == 0) return false;
  return true;
}

}  // namespace arith
