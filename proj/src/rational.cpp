#include "geodissect/rational.hpp"

#include <stdexcept>

namespace geodissect {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

RationalBound::RationalBound(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

RationalBound RationalBound::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return RationalBound(parse_decimal(text), BigInt(1));
  }
  BigInt num = parse_decimal(text.substr(0, slash));
  BigInt den = parse_decimal(text.substr(slash + 1));
  if (den <= 0) {
    throw std::invalid_argument("denominator must be positive: " +
                                std::string(text));
  }
  return RationalBound(std::move(num), std::move(den));
}

BigInt RationalBound::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt RationalBound::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string RationalBound::to_string() const {
  return to_decimal(value_.get_num()) + "/" + to_decimal(value_.get_den());
}

}  // namespace geodissect
