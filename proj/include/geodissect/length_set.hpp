#pragma once

// Infinite unary languages as strictly increasing streams of word lengths.
// A word a^k is represented by k alone; words are never materialized.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geodissect/construction.hpp"
#include "geodissect/rational.hpp"

namespace geodissect {

struct LengthRecord {
  BigInt length;
  // Set only for elements of Pi.
  std::optional<DeltaIndex> index;
};

// Single-consumer stream. contains() never disturbs the stream position.
class LengthSet {
 public:
  virtual ~LengthSet() = default;

  // Next length; nullopt once a finite set is exhausted.
  virtual std::optional<LengthRecord> next() = 0;
  virtual bool contains(const BigInt& length) const = 0;
  virtual std::string descriptor() const = 0;
  // A fresh instance positioned at the first element.
  virtual std::unique_ptr<LengthSet> restart() const = 0;
};

// phi(j, n) over (j, n) in Delta with n >= min_n, in (n, j) order.
class PiSet final : public LengthSet {
 public:
  PiSet(const Params& p, std::uint64_t min_n = 1);

  std::optional<LengthRecord> next() override;
  bool contains(const BigInt& length) const override;
  std::string descriptor() const override;
  std::unique_ptr<LengthSet> restart() const override;

  const Params& params() const { return params_; }
  std::uint64_t min_n() const { return min_n_; }

 private:
  void advance_to_admitted(std::uint64_t from);

  Params params_;
  std::uint64_t min_n_;
  LogRatioSweep sweep_;
  std::optional<DeltaIndex> current_;
  std::uint64_t level_ = 0;
  std::uint64_t factorial_n_ = 0;
  BigInt factorial_ = 1;
  BigInt last_length_ = -1;
};

// 1!, 2!, 3!, ...
class FactorialSet final : public LengthSet {
 public:
  std::optional<LengthRecord> next() override;
  bool contains(const BigInt& length) const override;
  std::string descriptor() const override { return "factorial"; }
  std::unique_ptr<LengthSet> restart() const override;

 private:
  std::uint64_t n_ = 0;
  BigInt factorial_ = 1;
};

// q + r, q + 2r, q + 3r, ...
class ApSet final : public LengthSet {
 public:
  ApSet(BigInt q, BigInt r);

  std::optional<LengthRecord> next() override;
  bool contains(const BigInt& length) const override;
  std::string descriptor() const override;
  std::unique_ptr<LengthSet> restart() const override;

  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }

 private:
  BigInt q_;
  BigInt r_;
  BigInt current_;
};

// Finite set loaded from text, one strictly increasing decimal per line.
class FileSet final : public LengthSet {
 public:
  FileSet(std::vector<BigInt> lengths, std::string origin);

  std::optional<LengthRecord> next() override;
  bool contains(const BigInt& length) const override;
  std::string descriptor() const override { return "file:" + origin_; }
  std::unique_ptr<LengthSet> restart() const override;

 private:
  std::vector<BigInt> lengths_;
  std::string origin_;
  std::size_t position_ = 0;
};

std::unique_ptr<PiSet> make_pi(const Params& p);

// Largest n dropped from Pi to obtain the c-geometrically growing subset:
// max(corollary_n0(p, c), delta_contiguous_from(p) - 1).
std::uint64_t pi_bar_cutoff(const Params& p, const RationalBound& c);
// Pi restricted to n > pi_bar_cutoff(p, c). Throws unless c > beta/alpha.
std::unique_ptr<PiSet> make_pi_bar(const Params& p, const RationalBound& c);
// The finitely many elements of Pi that make_pi_bar omits, in order.
std::vector<LengthRecord> pi_bar_removed(const Params& p,
                                         const RationalBound& c);

std::unique_ptr<FactorialSet> make_factorial();
std::unique_ptr<ApSet> make_ap(const BigInt& q, const BigInt& r);
// Throws std::invalid_argument naming the offending line.
std::unique_ptr<FileSet> make_file_set(const std::filesystem::path& path);
std::unique_ptr<FileSet> read_length_set(std::istream& in,
                                         const std::string& origin);

// First k elements (fewer if the set is finite).
std::vector<LengthRecord> take(LengthSet& set, std::size_t k);

}  // namespace geodissect
