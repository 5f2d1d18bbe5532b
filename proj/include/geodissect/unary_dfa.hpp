#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "geodissect/length_set.hpp"
#include "geodissect/rational.hpp"

namespace geodissect {

// One-letter DFA in tail+cycle (lasso) normal form. Length l is accepted by
// tail[l] when l < tail.size(), otherwise by cycle[(l - tail.size()) % cycle.size()].
// Two automata with the same flag vectors are equal; no minimization happens.
class UnaryDfa {
 public:
  UnaryDfa(std::vector<bool> tail, std::vector<bool> cycle);

  const std::vector<bool>& tail() const { return tail_; }
  const std::vector<bool>& cycle() const { return cycle_; }
  std::size_t tail_length() const { return tail_.size(); }
  std::size_t cycle_length() const { return cycle_.size(); }

  // Time proportional to the digit count of length.
  bool accepts(const BigInt& length) const;
  bool accepts(std::uint64_t length) const;

  // Cycle position reached by lengths >= tail_length() congruent to residue
  // modulo cycle_length().
  std::size_t cycle_position_of_residue(std::uint64_t residue) const;

  bool has_accepting_cycle_position() const;
  UnaryDfa complement() const;

  friend bool operator==(const UnaryDfa&, const UnaryDfa&) = default;

 private:
  std::vector<bool> tail_;
  std::vector<bool> cycle_;
};

// transitions[s] is the successor of state s. States unreachable from start
// are dropped. Throws std::invalid_argument on out-of-range states.
UnaryDfa dfa_from_table(std::span<const std::int64_t> transitions,
                        std::int64_t start,
                        std::span<const std::int64_t> accepting);

bool dfa_accept(const UnaryDfa& d, const BigInt& length);

// The language {q + i*r : i >= 1}.
struct Reg1Component {
  std::uint64_t q = 0;
  std::uint64_t r = 1;

  friend bool operator==(const Reg1Component&, const Reg1Component&) = default;
};

struct Reg1Decomposition {
  std::vector<Reg1Component> components;
  // Sorted accepted lengths not covered by any component.
  std::vector<std::uint64_t> exceptional;

  bool finite_language() const { return components.empty(); }
};

// One component per accepting cycle position; accepting tail lengths and
// any smallest cycle length below r go to the exceptional set.
Reg1Decomposition decompose_reg1(const UnaryDfa& d);

std::unique_ptr<ApSet> reg1_language(const Reg1Component& comp);

// Normal-form automaton accepting exactly {q + i*r : i >= 1}.
UnaryDfa ap_dfa(std::uint64_t q, std::uint64_t r);

}  // namespace geodissect
