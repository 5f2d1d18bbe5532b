#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "geodissect/length_set.hpp"
#include "oracles.hpp"

using namespace geodissect;

namespace {

std::vector<BigInt> lengths(LengthSet& s, std::size_t k) {
  std::vector<BigInt> out;
  for (auto& rec : take(s, k)) out.push_back(rec.length);
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("make_pi (1,2) prefix") {
  auto pi = make_pi(Params(1, 2));
  const auto recs = take(*pi, 8);
  std::vector<BigInt> got;
  for (const auto& r : recs) got.push_back(r.length);
  CHECK(got == big({1, 2, 4, 6, 12, 24, 48, 96}));
  CHECK(recs[7].index == DeltaIndex{2, 4});
  CHECK(recs[3].index == DeltaIndex{0, 3});
}

TEST_CASE("make_pi (2,3) starts at n=1 and then jumps to n=11") {
  auto pi = make_pi(Params(2, 3));
  const auto recs = take(*pi, 3);
  CHECK(recs[0].length == 1);
  CHECK(recs[1].length == oracle::fact(11));
  CHECK(recs[1].index == DeltaIndex{0, 11});
  CHECK(recs[2].length == BigInt("59875200"));
}

TEST_CASE("make_pi matches the sort-based oracle up to n = 25") {
  for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
    const auto expected = oracle::pi_sorted(a, b, 25);
    for (std::size_t i = 1; i < expected.size(); ++i) {
      REQUIRE(expected[i - 1].length < expected[i].length);
    }
    auto pi = make_pi(Params(a, b));
    for (const auto& e : expected) {
      const auto rec = pi->next();
      REQUIRE(rec->length == e.length);
      REQUIRE(rec->index == DeltaIndex{e.j, e.n});
    }
  }
}

TEST_CASE("streams are strictly increasing") {
  std::vector<std::unique_ptr<LengthSet>> sets;
  sets.push_back(make_pi(Params(1, 2)));
  sets.push_back(make_pi(Params(3, 4)));
  sets.push_back(make_pi_bar(Params(2, 3), RationalBound::parse("2")));
  sets.push_back(make_factorial());
  sets.push_back(make_ap(BigInt(7), BigInt(3)));
  for (auto& s : sets) {
    auto prev = s->next();
    for (int i = 1; i < 1000; ++i) {
      auto cur = s->next();
      REQUIRE(prev->length < cur->length);
      prev = std::move(cur);
    }
  }
}

TEST_CASE("contains agrees with stream membership") {
  std::vector<std::unique_ptr<LengthSet>> sets;
  sets.push_back(make_pi(Params(1, 2)));
  sets.push_back(make_factorial());
  sets.push_back(make_ap(BigInt(2), BigInt(5)));
  sets.push_back(make_pi(Params(2, 5)));
  for (auto& s : sets) {
    auto stream = s->restart();
    const auto prefix = take(*stream, 500);
    // Every emitted value is a member; every gap value below it is not.
    BigInt expected_next = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const BigInt& v = prefix[i].length;
      REQUIRE(s->contains(v));
      if (i < 60) {
        for (BigInt x = expected_next; x < v && x < expected_next + 50; ++x) {
          REQUIRE_FALSE(s->contains(x));
        }
      } else {
        REQUIRE_FALSE(s->contains(v - 1));
        REQUIRE_FALSE(s->contains(v + 1));
      }
      expected_next = v + 1;
    }
  }
}

TEST_CASE("make_pi_bar drops a finite prefix") {
  const Params p(1, 2);
  const auto c = RationalBound::parse("3/1");
  CHECK(pi_bar_cutoff(p, c) == 3);
  auto bar = make_pi_bar(p, c);
  CHECK(lengths(*bar, 4) == big({24, 48, 96, 120}));
  std::vector<BigInt> removed;
  for (auto& r : pi_bar_removed(p, c)) removed.push_back(r.length);
  CHECK(removed == big({1, 2, 4, 6, 12}));
  CHECK_THROWS_AS(make_pi_bar(p, RationalBound(2)), std::invalid_argument);
}

TEST_CASE("make_pi_bar (2,3) c=2 starts past the last Delta gap") {
  const Params p(2, 3);
  const auto c = RationalBound::parse("2/1");
  CHECK(corollary_n0(p, c) == 4);
  CHECK(pi_bar_cutoff(p, c) == 12);
  auto bar = make_pi_bar(p, c);
  const auto first = bar->next();
  CHECK(first->index == DeltaIndex{0, 13});
  const auto removed = pi_bar_removed(p, c);
  CHECK(removed.size() == 1 + 6);  // n=1 and (j, 11), j <= 5
  CHECK(removed.back().index == DeltaIndex{5, 11});
}

TEST_CASE("factorial and arithmetic progression sets") {
  auto f = make_factorial();
  CHECK(lengths(*f, 4) == big({1, 2, 6, 24}));
  CHECK(f->contains(BigInt(120)));
  CHECK_FALSE(f->contains(BigInt(0)));
  CHECK_FALSE(f->contains(BigInt(100)));

  auto ap = make_ap(BigInt(0), BigInt(3));
  CHECK(lengths(*ap, 3) == big({3, 6, 9}));
  auto ap2 = make_ap(BigInt(2), BigInt(5));
  CHECK(ap2->contains(BigInt(12)));
  CHECK_FALSE(ap2->contains(BigInt(2)));
  CHECK_FALSE(ap2->contains(BigInt(13)));
  CHECK_THROWS_AS(make_ap(BigInt(0), BigInt(0)), std::invalid_argument);
  CHECK(ap2->descriptor() == "ap(q=2, r=5)");
}

TEST_CASE("file-backed set validation") {
  std::istringstream good("3\n5\n100000000000000000000000\n");
  auto s = read_length_set(good, "good.txt");
  CHECK(lengths(*s, 10).size() == 3);
  CHECK(s->contains(BigInt("100000000000000000000000")));
  CHECK_FALSE(s->contains(BigInt(4)));
  CHECK_FALSE(s->next().has_value());

  auto message_for = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_length_set(in, "f");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_for("3\n2\n") == "f:2: lengths not increasing");
  CHECK(message_for("3\n3\n") == "f:2: duplicate length");
  CHECK(message_for("1\n\n4\n") == "f:2: blank line");
  CHECK(message_for("1\nx\n") == "f:2: not a decimal integer: x");
  CHECK(message_for("-1\n") == "f:1: negative length");
  CHECK_THROWS_AS(make_file_set("/nonexistent/file.txt"), std::invalid_argument);
}
