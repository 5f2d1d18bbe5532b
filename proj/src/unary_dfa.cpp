#include "geodissect/unary_dfa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace geodissect {

UnaryDfa::UnaryDfa(std::vector<bool> tail, std::vector<bool> cycle)
    : tail_(std::move(tail)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("cycle must be non-empty");
}

bool UnaryDfa::accepts(std::uint64_t length) const {
  if (length < tail_.size()) return tail_[length];
  return cycle_[(length - tail_.size()) % cycle_.size()];
}

bool UnaryDfa::accepts(const BigInt& length) const {
  if (length < 0) return false;
  if (length < tail_.size()) return tail_[length.get_ui()];
  BigInt offset = length - tail_.size();
  const unsigned long position =
      mpz_fdiv_ui(offset.get_mpz_t(), cycle_.size());
  return cycle_[position];
}

std::size_t UnaryDfa::cycle_position_of_residue(std::uint64_t residue) const {
  const std::uint64_t r = cycle_.size();
  const std::uint64_t shift = tail_.size() % r;
  return static_cast<std::size_t>((residue % r + r - shift) % r);
}

bool UnaryDfa::has_accepting_cycle_position() const {
  return std::find(cycle_.begin(), cycle_.end(), true) != cycle_.end();
}

UnaryDfa UnaryDfa::complement() const {
  std::vector<bool> tail = tail_;
  std::vector<bool> cycle = cycle_;
  tail.flip();
  cycle.flip();
  return UnaryDfa(std::move(tail), std::move(cycle));
}

UnaryDfa dfa_from_table(std::span<const std::int64_t> transitions,
                        std::int64_t start,
                        std::span<const std::int64_t> accepting) {
  const auto states = static_cast<std::int64_t>(transitions.size());
  if (states == 0) throw std::invalid_argument("transition table is empty");
  for (std::int64_t s = 0; s < states; ++s) {
    const auto t = transitions[static_cast<std::size_t>(s)];
    if (t < 0 || t >= states) {
      throw std::invalid_argument("state " + std::to_string(s) +
                                  " has no valid transition (target " +
                                  std::to_string(t) + ")");
    }
  }
  if (start < 0 || start >= states) {
    throw std::invalid_argument("start state " + std::to_string(start) +
                                " out of range");
  }
  std::vector<bool> is_accepting(static_cast<std::size_t>(states), false);
  for (auto a : accepting) {
    if (a < 0 || a >= states) {
      throw std::invalid_argument("accepting state " + std::to_string(a) +
                                  " out of range");
    }
    is_accepting[static_cast<std::size_t>(a)] = true;
  }

  // Walk until a state repeats; its first visit opens the cycle.
  std::vector<std::int64_t> first_visit(static_cast<std::size_t>(states), -1);
  std::vector<bool> walk;
  std::int64_t state = start;
  std::int64_t step = 0;
  while (first_visit[static_cast<std::size_t>(state)] < 0) {
    first_visit[static_cast<std::size_t>(state)] = step++;
    walk.push_back(is_accepting[static_cast<std::size_t>(state)]);
    state = transitions[static_cast<std::size_t>(state)];
  }
  const auto loop_start =
      static_cast<std::size_t>(first_visit[static_cast<std::size_t>(state)]);
  std::vector<bool> tail(walk.begin(), walk.begin() + loop_start);
  std::vector<bool> cycle(walk.begin() + loop_start, walk.end());
  return UnaryDfa(std::move(tail), std::move(cycle));
}

bool dfa_accept(const UnaryDfa& d, const BigInt& length) {
  return d.accepts(length);
}

Reg1Decomposition decompose_reg1(const UnaryDfa& d) {
  Reg1Decomposition out;
  const std::uint64_t q_tail = d.tail_length();
  const std::uint64_t r = d.cycle_length();
  for (std::uint64_t l = 0; l < q_tail; ++l) {
    if (d.tail()[l]) out.exceptional.push_back(l);
  }
  for (std::uint64_t offset = 0; offset < r; ++offset) {
    if (!d.cycle()[offset]) continue;
    const std::uint64_t smallest = q_tail + offset;
    if (smallest >= r) {
      out.components.push_back({smallest - r, r});
    } else {
      // q must be non-negative, so the smallest length becomes exceptional.
      out.exceptional.push_back(smallest);
      out.components.push_back({smallest, r});
    }
  }
  std::sort(out.exceptional.begin(), out.exceptional.end());
  return out;
}

std::unique_ptr<ApSet> reg1_language(const Reg1Component& comp) {
  return make_ap(BigInt(comp.q), BigInt(comp.r));
}

UnaryDfa ap_dfa(std::uint64_t q, std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("r must be >= 1");
  std::vector<bool> tail(q + 1, false);
  std::vector<bool> cycle(r, false);
  cycle[r - 1] = true;
  return UnaryDfa(std::move(tail), std::move(cycle));
}

}  // namespace geodissect
