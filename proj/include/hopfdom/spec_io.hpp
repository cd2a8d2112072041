#pragma once

#include <string>

#include "hopfdom/families.hpp"
#include "json.hpp"

namespace hopfdom {

/// Instance spec:
///   {"family": "A"|"B"|"C"|"CLift"|"GroupZ2"|"GroupZSemiZ"|"EnvAbelian"|"EnvNonabelian",
///    "n": int, "p": [int, ...], "q": {"order": l, "power": k} | {"rational": "p/q"}}
/// Throws InvalidParams whose pointer names the offending field.
FamilyParams params_from_json(const nlohmann::json& j);
FamilyParams load_spec(const std::string& path);

nlohmann::ordered_json scalar_to_json(const CycloScalar& c);
/// Echo in spec form; q as {"order","power"} when it is a root of unity.
nlohmann::ordered_json params_to_json(const FamilyParams& p);

}  // namespace hopfdom
