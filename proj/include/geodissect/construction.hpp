#pragma once

// Exact evaluation of the index set Delta, the length map phi and the
// divisor witness omega. No floating point is used anywhere: the scale
// floor(gamma * ln n) with gamma = 1 / (ln beta - ln alpha) is the integer
// floor of log_{beta/alpha}(n).

#include <compare>
#include <cstdint>
#include <string>

#include "geodissect/rational.hpp"

namespace geodissect {

// Pair (alpha, beta) of positive integers with alpha < beta.
class Params {
 public:
  Params(std::uint64_t alpha, std::uint64_t beta);

  std::uint64_t alpha() const { return alpha_; }
  std::uint64_t beta() const { return beta_; }
  // beta / alpha in lowest terms.
  RationalBound ratio() const;
  std::string to_string() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::uint64_t alpha_;
  std::uint64_t beta_;
};

// Element (j, n) of Delta. Ordered lexicographically by (n, j), which is
// also the numeric order of the corresponding lengths.
struct DeltaIndex {
  std::uint64_t j = 0;
  std::uint64_t n = 1;

  friend bool operator==(const DeltaIndex&, const DeltaIndex&) = default;
  friend std::strong_ordering operator<=>(const DeltaIndex& a,
                                          const DeltaIndex& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.j <=> b.j;
  }
};

std::string to_string(const DeltaIndex& idx);

// Largest k >= 0 with beta^k <= n * alpha^k. Throws for n == 0.
std::uint64_t floor_log_ratio(const Params& p, std::uint64_t n);

// Incremental floor_log_ratio for a non-decreasing sequence of queries.
class LogRatioSweep {
 public:
  explicit LogRatioSweep(const Params& p);

  // n must be >= every previous argument.
  std::uint64_t at(std::uint64_t n);

 private:
  std::uint64_t alpha_;
  std::uint64_t beta_;
  std::uint64_t last_n_ = 1;
  std::uint64_t k_ = 0;
  BigInt next_beta_pow_;
  BigInt next_alpha_pow_;
};

// n > alpha * floor_log_ratio(n): some (j, n) lies in Delta.
bool admits_n(const Params& p, std::uint64_t n);
bool in_delta(const Params& p, const DeltaIndex& idx);

BigInt factorial(std::uint64_t n);

// (beta/alpha)^j * n!. Throws std::invalid_argument outside Delta and
// std::logic_error if the division by alpha^j is not exact.
BigInt phi(const Params& p, const DeltaIndex& idx);
// Same, reusing a caller-supplied n!.
BigInt phi_from_factorial(const Params& p, std::uint64_t j,
                          const BigInt& n_factorial);

// n! / (alpha * L(n) + 1)!, i.e. the product alpha*L(n)+2 .. n.
BigInt omega(const Params& p, std::uint64_t n);

DeltaIndex delta_first(const Params& p);
// Next element of Delta in (n, j) order. Scans upward over n values that
// Delta does not admit.
DeltaIndex delta_successor(const Params& p, const DeltaIndex& idx);

// Smallest n0 >= 1 with (n0 + 1) * beta < n0 * alpha * c.
// Throws unless c > beta / alpha.
std::uint64_t corollary_n0(const Params& p, const RationalBound& c);

// N such that n - alpha * L(n) > r for every n >= N. Not necessarily
// minimal. Requires r >= 1.
std::uint64_t stabilization_threshold(const Params& p, std::uint64_t r);

// Smallest n such that every n' >= n is admitted by Delta.
std::uint64_t delta_contiguous_from(const Params& p);

// (alpha, beta) = (N, N + 1) with 1 < beta / alpha < c. Requires c > 1.
Params suggest_params(const RationalBound& c);

}  // namespace geodissect
