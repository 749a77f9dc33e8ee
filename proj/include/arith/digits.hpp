#pragma once

// Decimal digit sequences of nonnegative integers, most significant first.

#include "arith/int.hpp"

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arith {

// Non-empty, each digit in 0..9, no leading zero unless exactly [0].
class Digits {
public:
  explicit Digits(std::vector<int> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("Digits: empty digit sequence");
    for (int d : digits_)
      if (d < 0 || d > 9) throw std::invalid_argument("Digits: " + std::to_string(d) + " is not a decimal digit");
    if (digits_.size() > 1 && digits_.front() == 0) throw std::invalid_argument("Digits: leading zero");
  }
  Digits(std::initializer_list<int> digits) : Digits(std::vector<int>(digits)) {}

  std::span<const int> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int front() const { return digits_.front(); }
  int back() const { return digits_.back(); }

  std::string str() const {
    std::string s;
    for (int d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  friend bool operator==(const Digits&, const Digits&) = default;

private:
  std::vector<int> digits_;
};

inline Digits to_digits(const Int& n) {
  if (n < 0) throw DomainError("to_digits: negative number " + n.str());
  std::vector<int> ds;
  for (char c : n.str()) ds.push_back(c - '0');
  return Digits(std::move(ds));
}

inline Int from_digits(const Digits& d) {
  Int value = 0;
  for (int digit : d.digits()) value = value * 10 + digit;
  return value;
}

inline Int digit_sum(const Digits& d) {
  return Int{std::accumulate(d.digits().begin(), d.digits().end(), std::int64_t{0})};
}

inline Int last_digit(const Digits& d) { return Int{d.back()}; }

// The block written twice: abc -> abcabc.
inline Digits repeat_block(const Digits& d) {
  if (d.size() == 1 && d.front() == 0) throw DomainError("repeat_block: the block 0 has no canonical repetition");
  std::vector<int> ds(d.digits().begin(), d.digits().end());
  ds.insert(ds.end(), d.digits().begin(), d.digits().end());
  return Digits(std::move(ds));
}

}  // namespace arith
