#include "geodissect/certificate.hpp"

#include <stdexcept>
#include <vector>

namespace geodissect {

Json certificate_json(const DissectionVerdict& verdict) {
  Json exceptional = Json::array();
  for (const auto& l : verdict.exceptional_lengths) {
    exceptional.push_back(to_decimal(l));
  }
  return Json{{"params", params_to_json(verdict.params)},
              {"dfa", dfa_to_json(verdict.dfa)},
              {"r", verdict.r_cycle},
              {"threshold_n0", verdict.threshold_n0},
              {"finite_side", to_string(verdict.finite_side)},
              {"exceptional_lengths", exceptional},
              {"conclusion", to_string(verdict.conclusion)}};
}

namespace {

CertificateCheck fail(std::string reason) { return {false, std::move(reason)}; }

// Level k of n by direct upward search: largest k with beta^k <= n * alpha^k.
class Levels {
 public:
  Levels(std::uint64_t alpha, std::uint64_t beta)
      : alpha_(alpha), beta_(beta), beta_pow_(beta), alpha_pow_(alpha) {}

  std::uint64_t at(std::uint64_t n) {
    while (beta_pow_ <= BigInt(n) * alpha_pow_) {
      ++level_;
      beta_pow_ *= beta_;
      alpha_pow_ *= alpha_;
    }
    return level_;
  }

 private:
  std::uint64_t alpha_, beta_;
  std::uint64_t level_ = 0;
  BigInt beta_pow_, alpha_pow_;
};

bool accepted(const UnaryDfa& d, const BigInt& length) {
  const std::size_t tail = d.tail().size();
  if (length < tail) return d.tail()[length.get_ui()];
  BigInt offset = length - tail;
  BigInt position = offset % BigInt(d.cycle().size());
  return d.cycle()[position.get_ui()];
}

}  // namespace

CertificateCheck verify_certificate(const Json& cert) {
  std::uint64_t alpha, beta, r, threshold;
  std::string side, conclusion;
  std::vector<BigInt> claimed;
  std::optional<UnaryDfa> dfa;
  try {
    const Params p = params_from_json(cert.at("params"));
    alpha = p.alpha();
    beta = p.beta();
    dfa = dfa_from_json(cert.at("dfa"));
    r = cert.at("r").get<std::uint64_t>();
    threshold = cert.at("threshold_n0").get<std::uint64_t>();
    side = cert.at("finite_side").get<std::string>();
    conclusion = cert.at("conclusion").get<std::string>();
    for (const auto& e : cert.at("exceptional_lengths")) {
      claimed.push_back(parse_decimal(e.get<std::string>()));
    }
  } catch (const std::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }

  if (conclusion != "not_dissecting") return fail("unexpected conclusion");
  if (r != dfa->cycle().size()) return fail("r differs from the cycle length");
  if (side != "intersection" && side != "difference") {
    return fail("unknown finite_side " + side);
  }

  // threshold > ceil(alpha*beta/(beta-alpha)) and threshold - alpha*(L+1) >= r.
  if (threshold < 1 ||
      BigInt(threshold - 1) * (beta - alpha) < BigInt(alpha) * beta) {
    return fail("threshold_n0 does not exceed alpha*beta/(beta-alpha)");
  }
  {
    Levels levels(alpha, beta);
    const BigInt margin =
        BigInt(threshold) - BigInt(alpha) * (levels.at(threshold) + 1);
    if (margin < r) return fail("threshold_n0 margin below r");
  }

  const std::size_t tail = dfa->tail().size();
  const std::size_t zero_position = (r - tail % r) % r;
  const bool zero_accepted = dfa->cycle()[zero_position];
  if ((side == "difference") != zero_accepted) {
    return fail("finite_side disagrees with acceptance of residue 0");
  }

  std::vector<BigInt> expected;
  Levels levels(alpha, beta);
  BigInt n_factorial = 1;
  for (std::uint64_t n = 1;; ++n) {
    n_factorial *= n;
    const std::uint64_t level = levels.at(n);
    if (BigInt(n) <= BigInt(alpha) * level) continue;
    BigInt beta_pow = 1, alpha_pow = 1;
    for (std::uint64_t j = 0; j <= level; ++j) {
      const BigInt length = beta_pow * n_factorial / alpha_pow;
      if (n >= threshold && length >= tail) {
        if (expected != claimed) return fail("exceptional_lengths mismatch");
        return {true, "ok"};
      }
      if (accepted(*dfa, length) == (side == "intersection")) {
        expected.push_back(length);
      }
      beta_pow *= beta;
      alpha_pow *= alpha;
    }
  }
}

}  // namespace geodissect
