#include <doctest.h>

#include <random>
#include <stdexcept>

#include "geodissect/certificate.hpp"
#include "oracles.hpp"

using namespace geodissect;

TEST_CASE("DFA JSON accepts both encodings") {
  const auto normal = dfa_from_json(Json::parse(R"({"tail":[false],"cycle":[false,true]})"));
  const auto table = dfa_from_json(
      Json::parse(R"({"transitions":[1,2,1],"start":0,"accepting":[2]})"));
  CHECK(normal == table);
  CHECK(dfa_to_json(table).dump() == R"({"tail":[false],"cycle":[false,true]})");
  const auto no_tail = dfa_from_json(Json::parse(R"({"cycle":[true]})"));
  CHECK(no_tail.tail_length() == 0);
}

TEST_CASE("malformed DFA JSON is rejected") {
  for (const char* text : {
           R"([1,2])",
           R"({"tail":[true]})",
           R"({"tail":[true],"cycle":[]})",
           R"({"cycle":[1,0]})",
           R"({"transitions":[0],"start":0})",
           R"({"transitions":[2],"start":0,"accepting":[]})",
           R"({"transitions":"x","start":0,"accepting":[]})",
       }) {
    CHECK_THROWS_AS(dfa_from_json(Json::parse(text)), std::invalid_argument);
  }
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"alpha":-1,"beta":2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"alpha":1})")),
                  std::invalid_argument);
}

TEST_CASE("record encodings") {
  const LengthRecord pi_rec{BigInt(96), DeltaIndex{2, 4}};
  CHECK(record_to_json(pi_rec).dump() == R"({"n":4,"j":2,"length":"96"})");
  CHECK(record_to_csv(pi_rec) == "4,2,96");
  const LengthRecord plain{BigInt("123456789012345678901234567890"), std::nullopt};
  CHECK(record_to_json(plain).dump() ==
        R"({"n":null,"j":null,"length":"123456789012345678901234567890"})");
  CHECK(record_to_csv(plain) == ",,123456789012345678901234567890");
}

TEST_CASE("certificate field order is fixed") {
  const auto v = dissect_verdict(Params(1, 2), ap_dfa(0, 2));
  CHECK(certificate_json(v).dump() ==
        R"({"params":{"alpha":1,"beta":2},"dfa":{"tail":[false],"cycle":[false,true]},)"
        R"("r":2,"threshold_n0":5,"finite_side":"difference","exceptional_lengths":["1"],)"
        R"("conclusion":"not_dissecting"})");
}

TEST_CASE("verify_certificate accepts genuine certificates") {
  std::mt19937_64 rng(11);
  for (const auto& p : {Params(1, 2), Params(2, 3), Params(3, 4)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto [tail, cycle] = oracle::random_lasso(rng, 12, 12);
      const auto cert = certificate_json(dissect_verdict(p, UnaryDfa(tail, cycle)));
      const auto check = verify_certificate(cert);
      CHECK_MESSAGE(check.ok, check.reason);
    }
  }
}

TEST_CASE("verify_certificate rejects tampered certificates") {
  const auto cert = certificate_json(
      dissect_verdict(Params(1, 2), UnaryDfa({}, {false, false, false, false, true})));
  REQUIRE(verify_certificate(cert).ok);

  auto flipped = cert;
  flipped["finite_side"] = "difference";
  CHECK_FALSE(verify_certificate(flipped).ok);

  auto low = cert;
  low["threshold_n0"] = 4;
  CHECK_FALSE(verify_certificate(low).ok);

  auto missing = cert;
  missing["exceptional_lengths"].erase(0);
  CHECK_FALSE(verify_certificate(missing).ok);

  auto extra = cert;
  extra["exceptional_lengths"].push_back("7");
  CHECK_FALSE(verify_certificate(extra).ok);

  auto wrong_r = cert;
  wrong_r["r"] = 3;
  CHECK_FALSE(verify_certificate(wrong_r).ok);

  auto garbage = cert;
  garbage.erase("dfa");
  const auto check = verify_certificate(garbage);
  CHECK_FALSE(check.ok);
  CHECK(check.reason.rfind("malformed certificate", 0) == 0);
}
