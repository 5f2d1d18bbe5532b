#include "geodissect/construction.hpp"

#include <limits>
#include <stdexcept>

namespace geodissect {

namespace {

BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::uint64_t to_u64(const BigInt& value, const char* what) {
  if (value < 0 || !mpz_fits_ulong_p(value.get_mpz_t())) {
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  }
  return value.get_ui();
}

// Smallest n with n - alpha*(L(n)+1) >= r and n > ceil(alpha*beta/(beta-alpha)).
// x - alpha*gamma*ln x is increasing past alpha*gamma <= alpha*beta/(beta-alpha),
// and n - alpha*L(n) >= n - alpha*gamma*ln n > n - alpha*(L(n)+1), so the
// margin n - alpha*L(n) > r holds for every n at or beyond the result.
std::uint64_t margin_threshold(const Params& p, std::uint64_t r) {
  BigInt a(p.alpha()), b(p.beta());
  BigInt guard;
  BigInt num = a * b;
  BigInt den = b - a;
  mpz_cdiv_q(guard.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::uint64_t n = to_u64(guard + 1, "stabilization guard");

  LogRatioSweep sweep(p);
  for (;; ++n) {
    const auto level = static_cast<unsigned __int128>(sweep.at(n)) + 1;
    const auto needed = level * p.alpha() + r;
    if (static_cast<unsigned __int128>(n) >= needed) return n;
    if (n == std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("stabilization threshold exceeds 64 bits");
    }
  }
}

}  // namespace

Params::Params(std::uint64_t alpha, std::uint64_t beta)
    : alpha_(alpha), beta_(beta) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (beta <= alpha) {
    throw std::invalid_argument("alpha < beta required (alpha=" +
                                std::to_string(alpha) +
                                ", beta=" + std::to_string(beta) + ")");
  }
}

RationalBound Params::ratio() const {
  return RationalBound(BigInt(beta_), BigInt(alpha_));
}

std::string Params::to_string() const {
  return "(alpha=" + std::to_string(alpha_) + ", beta=" +
         std::to_string(beta_) + ")";
}

std::string to_string(const DeltaIndex& idx) {
  return "(j=" + std::to_string(idx.j) + ", n=" + std::to_string(idx.n) + ")";
}

std::uint64_t floor_log_ratio(const Params& p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("floor_log_ratio undefined at n = 0");
  const BigInt big_n(n);
  auto holds = [&](std::uint64_t k) {
    return pow_big(p.beta(), k) <= big_n * pow_big(p.alpha(), k);
  };
  // holds(0) is always true; find hi with holds(hi) false.
  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  while (holds(hi)) {
    lo = hi;
    hi *= 2;
  }
  // Invariant: holds(lo), !holds(hi).
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

LogRatioSweep::LogRatioSweep(const Params& p)
    : alpha_(p.alpha()),
      beta_(p.beta()),
      next_beta_pow_(p.beta()),
      next_alpha_pow_(p.alpha()) {}

std::uint64_t LogRatioSweep::at(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("floor_log_ratio undefined at n = 0");
  if (n < last_n_) throw std::logic_error("LogRatioSweep queried out of order");
  last_n_ = n;
  const BigInt big_n(n);
  while (next_beta_pow_ <= big_n * next_alpha_pow_) {
    ++k_;
    next_beta_pow_ *= beta_;
    next_alpha_pow_ *= alpha_;
  }
  return k_;
}

bool admits_n(const Params& p, std::uint64_t n) {
  if (n == 0) return false;
  const auto level = static_cast<unsigned __int128>(floor_log_ratio(p, n));
  return static_cast<unsigned __int128>(n) > level * p.alpha();
}

bool in_delta(const Params& p, const DeltaIndex& idx) {
  if (idx.n == 0) return false;
  const std::uint64_t level = floor_log_ratio(p, idx.n);
  return static_cast<unsigned __int128>(idx.n) >
             static_cast<unsigned __int128>(level) * p.alpha() &&
         idx.j <= level;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt phi_from_factorial(const Params& p, std::uint64_t j,
                          const BigInt& n_factorial) {
  BigInt numerator = pow_big(p.beta(), j) * n_factorial;
  const BigInt divisor = pow_big(p.alpha(), j);
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
              numerator.get_mpz_t(), divisor.get_mpz_t());
  if (remainder != 0) {
    throw std::logic_error("phi: alpha^" + std::to_string(j) +
                           " does not divide beta^j * n!");
  }
  return quotient;
}

BigInt phi(const Params& p, const DeltaIndex& idx) {
  if (!in_delta(p, idx)) {
    throw std::invalid_argument("phi: " + to_string(idx) + " not in Delta for " +
                                p.to_string());
  }
  return phi_from_factorial(p, idx.j, factorial(idx.n));
}

BigInt omega(const Params& p, std::uint64_t n) {
  if (!admits_n(p, n)) {
    throw std::invalid_argument("omega: n=" + std::to_string(n) +
                                " violates n > alpha * L(n)");
  }
  const std::uint64_t first = p.alpha() * floor_log_ratio(p, n) + 2;
  BigInt product = 1;
  for (std::uint64_t m = first; m <= n; ++m) product *= m;
  return product;
}

DeltaIndex delta_first(const Params&) { return DeltaIndex{0, 1}; }

DeltaIndex delta_successor(const Params& p, const DeltaIndex& idx) {
  if (!in_delta(p, idx)) {
    throw std::invalid_argument("delta_successor: " + to_string(idx) +
                                " not in Delta");
  }
  if (idx.j < floor_log_ratio(p, idx.n)) return DeltaIndex{idx.j + 1, idx.n};
  LogRatioSweep sweep(p);
  for (std::uint64_t n = idx.n + 1;; ++n) {
    const auto level = static_cast<unsigned __int128>(sweep.at(n));
    if (static_cast<unsigned __int128>(n) > level * p.alpha()) {
      return DeltaIndex{0, n};
    }
  }
}

std::uint64_t corollary_n0(const Params& p, const RationalBound& c) {
  if (c <= p.ratio()) {
    throw std::invalid_argument("corollary_n0: c=" + c.to_string() +
                                " must exceed beta/alpha=" +
                                p.ratio().to_string());
  }
  // (n+1)*beta*den < n*alpha*num  <=>  n * gap > beta*den.
  const BigInt bd = BigInt(p.beta()) * c.denominator();
  const BigInt gap = BigInt(p.alpha()) * c.numerator() - bd;
  BigInt quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), bd.get_mpz_t(), gap.get_mpz_t());
  return to_u64(quotient + 1, "corollary n0");
}

std::uint64_t stabilization_threshold(const Params& p, std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("stabilization_threshold: r >= 1");
  return margin_threshold(p, r);
}

std::uint64_t delta_contiguous_from(const Params& p) {
  std::uint64_t n = margin_threshold(p, 0);
  while (n > 1 && admits_n(p, n - 1)) --n;
  return n;
}

Params suggest_params(const RationalBound& c) {
  if (c <= RationalBound(1)) {
    throw std::invalid_argument("suggest_params: c=" + c.to_string() +
                                " must exceed 1");
  }
  const BigInt num = c.numerator();
  const BigInt den = c.denominator();
  BigInt base;
  BigInt gap = num - den;
  mpz_fdiv_q(base.get_mpz_t(), den.get_mpz_t(), gap.get_mpz_t());
  const std::uint64_t alpha = to_u64(base + 1, "suggested alpha");
  if (alpha == std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("suggested beta exceeds 64 bits");
  }
  return Params(alpha, alpha + 1);
}

}  // namespace geodissect
