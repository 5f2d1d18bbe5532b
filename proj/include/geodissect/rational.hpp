#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace geodissect {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& value);
BigInt parse_decimal(std::string_view text);

// Exact stand-in for the real constants c, beta/alpha and (n+1)beta/(n alpha).
// Always held in lowest terms with a positive denominator.
class RationalBound {
 public:
  RationalBound() : value_(0) {}
  RationalBound(BigInt numerator, BigInt denominator);
  explicit RationalBound(long whole) : value_(whole) {}

  // Accepts "p/q" or a bare integer "p".
  static RationalBound parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_integral() const { return value_.get_den() == 1; }
  // Largest integer not above the value.
  BigInt floor() const;
  // Smallest integer not below the value.
  BigInt ceil() const;

  std::string to_string() const;

  friend bool operator==(const RationalBound& a, const RationalBound& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const RationalBound& a, const RationalBound& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const RationalBound& a, const RationalBound& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const RationalBound& a, const RationalBound& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const RationalBound& a, const RationalBound& b) {
    return a.value_ >= b.value_;
  }

 private:
  explicit RationalBound(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

}  // namespace geodissect
