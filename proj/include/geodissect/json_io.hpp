#pragma once

// JSON and text encodings shared by the CLI and the certificate checker.
// Field order is fixed so identical inputs serialize byte-identically.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "geodissect/construction.hpp"
#include "geodissect/length_set.hpp"
#include "geodissect/unary_dfa.hpp"

namespace geodissect {

using Json = nlohmann::ordered_json;

Json params_to_json(const Params& p);
Params params_from_json(const Json& j);

// {"tail": [...], "cycle": [...]}
Json dfa_to_json(const UnaryDfa& d);
// Accepts normal form or {"transitions": [...], "start": s, "accepting": [...]}.
// Throws std::invalid_argument on malformed input.
UnaryDfa dfa_from_json(const Json& j);
UnaryDfa load_dfa(const std::filesystem::path& path);

// {"n": int|null, "j": int|null, "length": "decimal"}
Json record_to_json(const LengthRecord& rec);
std::string record_to_csv(const LengthRecord& rec);

Json decomposition_to_json(const Reg1Decomposition& dec);

}  // namespace geodissect
