#include "geodissect/analysis.hpp"

#include <stdexcept>

namespace geodissect {

std::string to_string(GrowthMode mode) {
  return mode == GrowthMode::constant ? "constant" : "geometric";
}

GrowthMode parse_growth_mode(const std::string& text) {
  if (text == "constant") return GrowthMode::constant;
  if (text == "geometric") return GrowthMode::geometric;
  throw std::invalid_argument("unknown growth mode: " + text);
}

std::string to_string(FiniteSide side) {
  return side == FiniteSide::intersection ? "intersection" : "difference";
}

std::string to_string(Conclusion) { return "not_dissecting"; }

GrowthReport check_growth(LengthSet& s, GrowthMode mode, const RationalBound& c,
                          std::size_t k) {
  if (k < 2) throw std::invalid_argument("check_growth needs k >= 2");
  if (mode == GrowthMode::geometric && c <= RationalBound(1)) {
    throw std::invalid_argument("geometric growth needs c > 1");
  }
  if (mode == GrowthMode::constant && c < RationalBound(1)) {
    throw std::invalid_argument("constant growth needs c >= 1");
  }
  GrowthReport report{mode, c, 0, true, std::nullopt};
  const BigInt num = c.numerator();
  const BigInt den = c.denominator();

  auto prev = s.next();
  for (std::size_t i = 0; prev && i + 1 < k; ++i) {
    auto cur = s.next();
    if (!cur) break;
    ++report.checked_count;
    const BigInt& a = prev->length;
    const BigInt& b = cur->length;
    const bool fits = mode == GrowthMode::geometric ? b * den <= num * a
                                                    : (b - a) * den <= num;
    if (a >= b || !fits) {
      report.ok = false;
      report.witness = GrowthWitness{i, a, b};
      break;
    }
    prev = std::move(cur);
  }
  return report;
}

DivisibilityReport check_divisibility(const Params& p, std::uint64_t n_max) {
  DivisibilityReport report;
  BigInt n_factorial = 1;
  LogRatioSweep sweep(p);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    n_factorial *= n;
    const std::uint64_t level = sweep.at(n);
    if (static_cast<unsigned __int128>(n) <=
        static_cast<unsigned __int128>(level) * p.alpha()) {
      continue;
    }
    const BigInt divisor = omega(p, n);
    BigInt beta_pow = 1, alpha_pow = 1;
    for (std::uint64_t j = 0; j <= level; ++j) {
      ++report.checked;
      const BigInt numerator = beta_pow * n_factorial;
      const bool integral =
          mpz_divisible_p(numerator.get_mpz_t(), alpha_pow.get_mpz_t()) != 0;
      bool divisible = false;
      if (integral) {
        const BigInt value = numerator / alpha_pow;
        divisible = mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
      }
      if (!divisible) {
        report.counterexample = DeltaIndex{j, n};
        return report;
      }
      beta_pow *= p.beta();
      alpha_pow *= p.alpha();
    }
  }
  return report;
}

RatioReport check_ratio_bounds(const Params& p, std::size_t k) {
  if (k < 1) throw std::invalid_argument("check_ratio_bounds needs k >= 1");
  RatioReport report;
  const RationalBound step_ratio = p.ratio();
  DeltaIndex idx = delta_first(p);
  BigInt length = phi(p, idx);
  for (std::size_t step = 0; step < k; ++step) {
    const DeltaIndex next = delta_successor(p, idx);
    BigInt next_length = phi(p, next);
    RatioStep rs{idx, next, RationalBound(next_length, length)};
    ++report.steps;
    if (next.n == idx.n) {
      ++report.within_n;
      if (!(rs.ratio == step_ratio)) {
        report.violation = rs;
        return report;
      }
    } else if (next.n == idx.n + 1) {
      ++report.cross_n;
      const BigInt n(idx.n);
      const RationalBound lower(n + 1, n);
      const RationalBound upper((n + 1) * p.beta(), n * p.alpha());
      if (rs.ratio < lower || rs.ratio > upper) {
        report.violation = rs;
        return report;
      }
      if (rs.ratio == lower) report.lower_bound_equalities.push_back(rs);
    } else {
      report.skipped.push_back(rs);
    }
    idx = next;
    length = std::move(next_length);
  }
  return report;
}

namespace {

bool on_finite_side(FiniteSide side, bool accepted) {
  return side == FiniteSide::difference ? !accepted : accepted;
}

}  // namespace

DissectionVerdict dissect_verdict(const Params& p, const UnaryDfa& d) {
  const std::uint64_t r = d.cycle_length();
  const std::uint64_t threshold = stabilization_threshold(p, r);
  // Past the threshold every length is 0 mod r and lies on the cycle, so the
  // acceptance flag at residue 0 decides all but finitely many elements.
  const bool zero_accepted = d.cycle()[d.cycle_position_of_residue(0)];
  const FiniteSide side =
      zero_accepted ? FiniteSide::difference : FiniteSide::intersection;

  DissectionVerdict verdict{p, d, r, threshold, 0, side, {},
                            Conclusion::not_dissecting};
  const BigInt q_tail(d.tail_length());
  PiSet pi(p);
  for (;;) {
    auto rec = pi.next();
    if (rec->index->n >= threshold && rec->length >= q_tail) {
      if (mpz_divisible_ui_p(rec->length.get_mpz_t(), r) == 0) {
        throw std::logic_error("Pi element " + to_decimal(rec->length) +
                               " past threshold is not divisible by r=" +
                               std::to_string(r));
      }
      break;
    }
    if (on_finite_side(side, d.accepts(rec->length))) {
      verdict.exceptional_lengths.push_back(std::move(rec->length));
    }
  }
  return verdict;
}

EmpiricalCounts empirical_counts(LengthSet& s, const UnaryDfa& d,
                                 std::size_t k) {
  if (k < 1) throw std::invalid_argument("empirical_counts needs k >= 1");
  EmpiricalCounts counts;
  for (std::size_t i = 0; i < k; ++i) {
    const auto rec = s.next();
    if (!rec) break;
    if (d.accepts(rec->length)) {
      ++counts.in_count;
      counts.last_in_index = i;
    } else {
      ++counts.out_count;
      counts.last_out_index = i;
    }
  }
  return counts;
}

bool cross_check(const DissectionVerdict& verdict, std::size_t k) {
  if (k < 1) throw std::invalid_argument("cross_check needs k >= 1");
  PiSet pi(verdict.params);
  std::vector<BigInt> observed;
  std::optional<LengthRecord> last;
  for (std::size_t i = 0; i < k; ++i) {
    last = pi.next();
    if (on_finite_side(verdict.finite_side, verdict.dfa.accepts(last->length))) {
      observed.push_back(last->length);
    }
  }
  if (last->index->n < verdict.threshold_n0 ||
      last->length < verdict.dfa.tail_length()) {
    throw std::invalid_argument(
        "cross_check: k=" + std::to_string(k) + " too small; element " +
        to_string(*last->index) + " is below threshold n0=" +
        std::to_string(verdict.threshold_n0));
  }
  return observed == verdict.exceptional_lengths;
}

bool cross_check(const Params& p, const UnaryDfa& d, std::size_t k) {
  return cross_check(dissect_verdict(p, d), k);
}

}  // namespace geodissect
