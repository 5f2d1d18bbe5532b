#pragma once

// Test-only reference computations. They deliberately avoid the library's
// code paths: levels by plain upward search, phi through exact rationals,
// automata by stepping a transition table.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

inline mpz_class pow_u(std::uint64_t base, std::uint64_t e) {
  mpz_class out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Largest k with beta^k <= n * alpha^k, by counting up.
inline std::uint64_t level(std::uint64_t alpha, std::uint64_t beta,
                           std::uint64_t n) {
  std::uint64_t k = 0;
  mpz_class b = beta, a = alpha;
  while (b <= mpz_class(n) * a) {
    ++k;
    b *= beta;
    a *= alpha;
  }
  return k;
}

// Levels for n = 1..n_max in one pass.
inline std::vector<std::uint64_t> levels_upto(std::uint64_t alpha,
                                              std::uint64_t beta,
                                              std::uint64_t n_max) {
  std::vector<std::uint64_t> out(n_max + 1, 0);
  std::uint64_t k = 0;
  mpz_class b = beta, a = alpha;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    while (b <= mpz_class(n) * a) {
      ++k;
      b *= beta;
      a *= alpha;
    }
    out[n] = k;
  }
  return out;
}

inline mpz_class fact(std::uint64_t n) {
  mpz_class out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

// (beta/alpha)^j * n! through mpq; throws if not integral.
inline mpz_class phi(std::uint64_t alpha, std::uint64_t beta, std::uint64_t j,
                     std::uint64_t n) {
  mpq_class v(fact(n));
  for (std::uint64_t i = 0; i < j; ++i) {
    v *= mpq_class(beta, alpha);
    v.canonicalize();
  }
  if (v.get_den() != 1) throw std::logic_error("oracle phi not integral");
  return v.get_num();
}

inline mpz_class omega(std::uint64_t alpha, std::uint64_t beta,
                       std::uint64_t n) {
  const std::uint64_t k = level(alpha, beta, n);
  return fact(n) / fact(alpha * k + 1);
}

struct Element {
  mpz_class length;
  std::uint64_t j;
  std::uint64_t n;
};

// All of Delta with n <= n_max, phi evaluated, sorted by length.
inline std::vector<Element> pi_sorted(std::uint64_t alpha, std::uint64_t beta,
                                      std::uint64_t n_max) {
  std::vector<Element> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint64_t k = level(alpha, beta, n);
    if (n <= alpha * k) continue;
    for (std::uint64_t j = 0; j <= k; ++j) {
      out.push_back({phi(alpha, beta, j, n), j, n});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Element& a, const Element& b) { return a.length < b.length; });
  return out;
}

// One-letter DFA as a raw transition table.
struct TableDfa {
  std::vector<std::int64_t> transitions;
  std::int64_t start = 0;
  std::vector<std::int64_t> accepting;

  bool accepts(std::uint64_t length) const {
    std::int64_t s = start;
    for (std::uint64_t i = 0; i < length; ++i) {
      s = transitions[static_cast<std::size_t>(s)];
    }
    return std::find(accepting.begin(), accepting.end(), s) != accepting.end();
  }

  // Acceptance of every length 0..max_len by one walk.
  std::vector<bool> accepts_upto(std::uint64_t max_len) const {
    std::vector<bool> out;
    std::vector<bool> acc(transitions.size(), false);
    for (auto a : accepting) acc[static_cast<std::size_t>(a)] = true;
    std::int64_t s = start;
    for (std::uint64_t i = 0; i <= max_len; ++i) {
      out.push_back(acc[static_cast<std::size_t>(s)]);
      s = transitions[static_cast<std::size_t>(s)];
    }
    return out;
  }
};

inline TableDfa random_table(std::mt19937_64& rng, std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_states);
  const std::size_t m = size_dist(rng);
  std::uniform_int_distribution<std::int64_t> state(0, static_cast<std::int64_t>(m) - 1);
  TableDfa d;
  for (std::size_t i = 0; i < m; ++i) d.transitions.push_back(state(rng));
  d.start = state(rng);
  for (std::size_t i = 0; i < m; ++i) {
    if (rng() % 3 == 0) d.accepting.push_back(static_cast<std::int64_t>(i));
  }
  return d;
}

// Random tail/cycle flags with q_tail <= max_tail and 1 <= r <= max_cycle.
inline std::pair<std::vector<bool>, std::vector<bool>> random_lasso(
    std::mt19937_64& rng, std::size_t max_tail, std::size_t max_cycle) {
  std::uniform_int_distribution<std::size_t> tail_len(0, max_tail);
  std::uniform_int_distribution<std::size_t> cycle_len(1, max_cycle);
  std::vector<bool> tail(tail_len(rng)), cycle(cycle_len(rng));
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = rng() & 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) cycle[i] = rng() & 1;
  return {tail, cycle};
}

}  // namespace oracle
