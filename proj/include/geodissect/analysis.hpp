#pragma once

// Growth checkers, the divisibility and ratio checks on Pi, and the
// certified non-dissection verdict for unary regular languages.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodissect/construction.hpp"
#include "geodissect/length_set.hpp"
#include "geodissect/rational.hpp"
#include "geodissect/unary_dfa.hpp"

namespace geodissect {

enum class GrowthMode { constant, geometric };

std::string to_string(GrowthMode mode);
GrowthMode parse_growth_mode(const std::string& text);

struct GrowthWitness {
  std::size_t index = 0;  // position of the shorter length in the stream
  BigInt length;
  BigInt successor_length;
};

struct GrowthReport {
  GrowthMode mode = GrowthMode::geometric;
  RationalBound c;
  std::size_t checked_count = 0;  // consecutive pairs examined
  bool ok = true;
  std::optional<GrowthWitness> witness;
};

// Checks l' <= c*l (geometric) or l' <= c + l (constant) for each consecutive
// pair among the first k lengths. Equality passes. Stops at the first
// violation.
GrowthReport check_growth(LengthSet& s, GrowthMode mode, const RationalBound& c,
                          std::size_t k);

struct DivisibilityReport {
  std::size_t checked = 0;
  std::optional<DeltaIndex> counterexample;

  bool ok() const { return !counterexample; }
};

// phi(j, n) integral and divisible by omega(n) for all (j, n) in Delta, n <= n_max.
DivisibilityReport check_divisibility(const Params& p, std::uint64_t n_max);

struct RatioStep {
  DeltaIndex from;
  DeltaIndex to;
  RationalBound ratio;  // phi(to) / phi(from)
};

struct RatioReport {
  std::size_t steps = 0;
  std::size_t within_n = 0;
  std::size_t cross_n = 0;
  // Cross-n steps whose ratio equals the lower bound (n+1)/n exactly.
  std::vector<RatioStep> lower_bound_equalities;
  // Steps that jump over n values Delta does not admit; not bound-checked.
  std::vector<RatioStep> skipped;
  std::optional<RatioStep> violation;

  bool ok() const { return !violation; }
};

// Walks k successor steps from the least element of Delta. Within-n ratios
// must equal beta/alpha; ratios into n+1 must lie in [(n+1)/n, (n+1)beta/(n alpha)].
RatioReport check_ratio_bounds(const Params& p, std::size_t k);

enum class FiniteSide { intersection, difference };
enum class Conclusion { not_dissecting };

std::string to_string(FiniteSide side);
std::string to_string(Conclusion conclusion);

struct DissectionVerdict {
  Params params;
  UnaryDfa dfa;
  std::uint64_t r_cycle = 1;
  // Every Pi element with n >= threshold_n0 is divisible by r_cycle.
  std::uint64_t threshold_n0 = 1;
  std::uint64_t stable_residue = 0;
  FiniteSide finite_side = FiniteSide::intersection;
  // Exactly the Pi elements on the finite side, ascending.
  std::vector<BigInt> exceptional_lengths;
  Conclusion conclusion = Conclusion::not_dissecting;
};

DissectionVerdict dissect_verdict(const Params& p, const UnaryDfa& d);

struct EmpiricalCounts {
  std::size_t in_count = 0;
  std::size_t out_count = 0;
  std::optional<std::size_t> last_in_index;
  std::optional<std::size_t> last_out_index;
};

// Classifies the first k elements of s by d.
EmpiricalCounts empirical_counts(LengthSet& s, const UnaryDfa& d, std::size_t k);

// True iff among the first k elements of Pi the finite side of the verdict
// holds exactly its exceptional lengths. Throws std::invalid_argument when
// the k-th element is still below the verdict's threshold.
bool cross_check(const Params& p, const UnaryDfa& d, std::size_t k);
bool cross_check(const DissectionVerdict& verdict, std::size_t k);

}  // namespace geodissect
