#pragma once

// Exact integer arithmetic with floor-division conventions.
//
// Division by zero is total: a / 0 = 0 and a mod 0 = a, so that
// a = b * (a / b) + a mod b holds for every pair, b = 0 included.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arith {

using Int = boost::multiprecision::cpp_int;

// Raised when an operation is called outside its mathematical domain
// (negative isqrt argument, zero modulus, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct DivResult {
  Int quot;
  Int rem;

  friend bool operator==(const DivResult&, const DivResult&) = default;
};

inline DivResult divmod(const Int& a, const Int& b) {
  if (b == 0) return {Int{0}, a};
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);  // truncating
  if (r != 0 && ((r < 0) != (b < 0))) {
    q -= 1;
    r += b;
  }
  return {std::move(q), std::move(r)};
}

inline Int floor_div(const Int& a, const Int& b) { return divmod(a, b).quot; }

inline Int floor_mod(const Int& a, const Int& b) { return divmod(a, b).rem; }

inline Int abs(const Int& a) { return a < 0 ? Int{-a} : a; }

// a^n for a natural exponent; 0^0 = 1.
inline Int pow(const Int& base, std::uint64_t exponent) {
  Int result = 1;
  Int square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

inline Int pow(const Int& base, const Int& exponent) {
  if (exponent < 0) throw DomainError("pow: negative exponent " + exponent.str());
  if (exponent <= std::numeric_limits<std::uint64_t>::max())
    return pow(base, exponent.convert_to<std::uint64_t>());
  // Only the trivial bases have representable results here.
  if (base == 0 || base == 1) return base;
  if (base == -1) return (exponent & 1) != 0 ? Int{-1} : Int{1};
  throw DomainError("pow: exponent " + exponent.str() + " is too large");
}

// Largest s >= 0 with s*s <= n, by Newton iteration from above.
inline Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt: negative argument " + n.str());
  if (n < 2) return n;
  Int x = Int{1} << (boost::multiprecision::msb(n) / 2 + 1);
  while (true) {
    Int y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

// floor_mod(base^exponent, modulus) by square-and-multiply, never
// materializing the full power.
inline Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
  if (modulus == 0) throw DomainError("mod_pow: zero modulus");
  if (exponent < 0) throw DomainError("mod_pow: negative exponent " + exponent.str());
  const Int m = abs(modulus);
  Int result = floor_mod(Int{1}, m);
  Int square = floor_mod(base, m);
  Int e = exponent;
  while (e != 0) {
    if ((e & 1) != 0) result = (result * square) % m;
    e >>= 1;
    if (e != 0) square = (square * square) % m;
  }
  return floor_mod(result, modulus);
}

inline std::string to_decimal(const Int& a) { return a.str(); }

// Strict decimal: optional '-', then "0" or digits without a leading zero.
// "-0" is rejected so that rendering and parsing are mutually inverse.
inline Int parse_int(std::string_view text) {
  std::string_view digits = text;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  const auto bad = [&] {
    return std::invalid_argument("not a canonical decimal integer: '" + std::string(text) + "'");
  };
  if (digits.empty()) throw bad();
  for (char c : digits)
    if (c < '0' || c > '9') throw bad();
  if (digits.size() > 1 && digits.front() == '0') throw bad();
  if (negative && digits == "0") throw bad();
  Int value{std::string(digits)};
  return negative ? Int{-value} : value;
}

}  // namespace arith
