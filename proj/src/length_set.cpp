#include "geodissect/length_set.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace geodissect {

PiSet::PiSet(const Params& p, std::uint64_t min_n)
    : params_(p), min_n_(std::max<std::uint64_t>(min_n, 1)), sweep_(p) {}

void PiSet::advance_to_admitted(std::uint64_t from) {
  std::uint64_t n = from;
  std::uint64_t level = sweep_.at(n);
  while (static_cast<unsigned __int128>(n) <=
         static_cast<unsigned __int128>(level) * params_.alpha()) {
    level = sweep_.at(++n);
  }
  if (factorial_n_ > n) throw std::logic_error("PiSet moved backwards");
  while (factorial_n_ < n) factorial_ *= ++factorial_n_;
  current_ = DeltaIndex{0, n};
  level_ = level;
}

std::optional<LengthRecord> PiSet::next() {
  if (!current_) {
    advance_to_admitted(min_n_);
  } else if (current_->j < level_) {
    ++current_->j;
  } else {
    advance_to_admitted(current_->n + 1);
  }
  BigInt length = phi_from_factorial(params_, current_->j, factorial_);
  if (length <= last_length_) {
    throw std::logic_error("Pi stream not strictly increasing at " +
                           to_string(*current_) + " for " + params_.to_string());
  }
  last_length_ = length;
  return LengthRecord{std::move(length), current_};
}

bool PiSet::contains(const BigInt& length) const {
  if (length < 1) return false;
  PiSet cursor(params_, min_n_);
  for (;;) {
    const auto rec = cursor.next();
    if (rec->length >= length) return rec->length == length;
  }
}

std::string PiSet::descriptor() const {
  std::string out = "pi" + params_.to_string();
  if (min_n_ > 1) out += " n>=" + std::to_string(min_n_);
  return out;
}

std::unique_ptr<LengthSet> PiSet::restart() const {
  return std::make_unique<PiSet>(params_, min_n_);
}

std::optional<LengthRecord> FactorialSet::next() {
  factorial_ *= ++n_;
  return LengthRecord{factorial_, std::nullopt};
}

bool FactorialSet::contains(const BigInt& length) const {
  BigInt value = 1;
  for (std::uint64_t n = 1; value < length; value *= ++n) {
  }
  return length >= 1 && value == length;
}

std::unique_ptr<LengthSet> FactorialSet::restart() const {
  return std::make_unique<FactorialSet>();
}

ApSet::ApSet(BigInt q, BigInt r) : q_(std::move(q)), r_(std::move(r)) {
  if (q_ < 0) throw std::invalid_argument("arithmetic progression needs q >= 0");
  if (r_ < 1) throw std::invalid_argument("arithmetic progression needs r >= 1");
  current_ = q_;
}

std::optional<LengthRecord> ApSet::next() {
  current_ += r_;
  return LengthRecord{current_, std::nullopt};
}

bool ApSet::contains(const BigInt& length) const {
  if (length < q_ + r_) return false;
  BigInt offset = length - q_;
  return mpz_divisible_p(offset.get_mpz_t(), r_.get_mpz_t()) != 0;
}

std::string ApSet::descriptor() const {
  return "ap(q=" + to_decimal(q_) + ", r=" + to_decimal(r_) + ")";
}

std::unique_ptr<LengthSet> ApSet::restart() const {
  return std::make_unique<ApSet>(q_, r_);
}

FileSet::FileSet(std::vector<BigInt> lengths, std::string origin)
    : lengths_(std::move(lengths)), origin_(std::move(origin)) {}

std::optional<LengthRecord> FileSet::next() {
  if (position_ >= lengths_.size()) return std::nullopt;
  return LengthRecord{lengths_[position_++], std::nullopt};
}

bool FileSet::contains(const BigInt& length) const {
  return std::binary_search(lengths_.begin(), lengths_.end(), length);
}

std::unique_ptr<LengthSet> FileSet::restart() const {
  return std::make_unique<FileSet>(lengths_, origin_);
}

std::unique_ptr<PiSet> make_pi(const Params& p) {
  return std::make_unique<PiSet>(p, 1);
}

std::uint64_t pi_bar_cutoff(const Params& p, const RationalBound& c) {
  const std::uint64_t n0 = corollary_n0(p, c);
  return std::max(n0, delta_contiguous_from(p) - 1);
}

std::unique_ptr<PiSet> make_pi_bar(const Params& p, const RationalBound& c) {
  return std::make_unique<PiSet>(p, pi_bar_cutoff(p, c) + 1);
}

std::vector<LengthRecord> pi_bar_removed(const Params& p,
                                         const RationalBound& c) {
  const std::uint64_t cutoff = pi_bar_cutoff(p, c);
  std::vector<LengthRecord> removed;
  PiSet pi(p);
  for (auto rec = pi.next(); rec->index->n <= cutoff; rec = pi.next()) {
    removed.push_back(std::move(*rec));
  }
  return removed;
}

std::unique_ptr<FactorialSet> make_factorial() {
  return std::make_unique<FactorialSet>();
}

std::unique_ptr<ApSet> make_ap(const BigInt& q, const BigInt& r) {
  return std::make_unique<ApSet>(q, r);
}

std::unique_ptr<FileSet> read_length_set(std::istream& in,
                                         const std::string& origin) {
  std::vector<BigInt> lengths;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = origin + ":" + std::to_string(line_no) + ": ";
    if (line.empty()) throw std::invalid_argument(where + "blank line");
    BigInt value;
    try {
      value = parse_decimal(line);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(where + "not a decimal integer: " + line);
    }
    if (value < 0) throw std::invalid_argument(where + "negative length");
    if (!lengths.empty() && value <= lengths.back()) {
      throw std::invalid_argument(where + (value == lengths.back()
                                               ? "duplicate length"
                                               : "lengths not increasing"));
    }
    lengths.push_back(std::move(value));
  }
  return std::make_unique<FileSet>(std::move(lengths), origin);
}

std::unique_ptr<FileSet> make_file_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  return read_length_set(in, path.string());
}

std::vector<LengthRecord> take(LengthSet& set, std::size_t k) {
  std::vector<LengthRecord> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto rec = set.next();
    if (!rec) break;
    out.push_back(std::move(*rec));
  }
  return out;
}

}  // namespace geodissect
