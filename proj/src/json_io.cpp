#include "geodissect/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <type_traits>

namespace geodissect {

namespace {

template <typename T>
T read_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (!j.at(key).is_number_unsigned()) {
      throw std::invalid_argument(std::string("field \"") + key +
                                  "\" must be a non-negative integer");
    }
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad field \"") + key +
                                "\": " + e.what());
  }
}

}  // namespace

Json params_to_json(const Params& p) {
  return Json{{"alpha", p.alpha()}, {"beta", p.beta()}};
}

Params params_from_json(const Json& j) {
  return Params(read_field<std::uint64_t>(j, "alpha"),
                read_field<std::uint64_t>(j, "beta"));
}

Json dfa_to_json(const UnaryDfa& d) {
  Json tail = Json::array();
  Json cycle = Json::array();
  for (bool b : d.tail()) tail.push_back(b);
  for (bool b : d.cycle()) cycle.push_back(b);
  return Json{{"tail", tail}, {"cycle", cycle}};
}

UnaryDfa dfa_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("DFA must be a JSON object");
  if (j.contains("transitions")) {
    auto transitions = read_field<std::vector<std::int64_t>>(j, "transitions");
    auto start = read_field<std::int64_t>(j, "start");
    auto accepting = read_field<std::vector<std::int64_t>>(j, "accepting");
    return dfa_from_table(transitions, start, accepting);
  }
  if (j.contains("cycle")) {
    auto tail = j.contains("tail") ? read_field<std::vector<bool>>(j, "tail")
                                   : std::vector<bool>{};
    auto cycle = read_field<std::vector<bool>>(j, "cycle");
    return UnaryDfa(std::move(tail), std::move(cycle));
  }
  throw std::invalid_argument(
      "DFA needs either \"tail\"/\"cycle\" or \"transitions\"/\"start\"/\"accepting\"");
}

UnaryDfa load_dfa(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return dfa_from_json(j);
}

Json record_to_json(const LengthRecord& rec) {
  Json out;
  if (rec.index) {
    out["n"] = rec.index->n;
    out["j"] = rec.index->j;
  } else {
    out["n"] = nullptr;
    out["j"] = nullptr;
  }
  out["length"] = to_decimal(rec.length);
  return out;
}

std::string record_to_csv(const LengthRecord& rec) {
  std::string out;
  if (rec.index) {
    out = std::to_string(rec.index->n) + "," + std::to_string(rec.index->j);
  } else {
    out = ",";
  }
  return out + "," + to_decimal(rec.length);
}

Json decomposition_to_json(const Reg1Decomposition& dec) {
  Json components = Json::array();
  for (const auto& c : dec.components) {
    components.push_back(Json{{"q", c.q}, {"r", c.r}});
  }
  Json exceptional = Json::array();
  for (auto l : dec.exceptional) exceptional.push_back(std::to_string(l));
  return Json{{"components", components},
              {"exceptional", exceptional},
              {"finite", dec.finite_language()}};
}

}  // namespace geodissect
