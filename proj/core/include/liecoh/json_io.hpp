#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Keys appear in a fixed order so serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

/// Schema: {"dim": int, "basis": [string], "weights": [int] (optional),
/// "brackets": [{"i": int, "j": int, "coeffs": {"<k>": "p/q"}}]} with
/// 0-based indices, i < j, and rationals as "p/q" or integer strings.
/// Round-trips bit-exactly through structure_constants_from_json.
Json structure_constants_to_json(const StructureConstants& sc);

/// Parses the schema above. Rejects unknown fields, out-of-range indices,
/// i >= j, and malformed rationals with input_error. Does not validate the
/// Jacobi identity; callers do that explicitly.
StructureConstants structure_constants_from_json(const Json& j);

StructureConstants load_structure_constants(const std::string& path);
void save_structure_constants(const StructureConstants& sc, const std::string& path);

} // namespace liecoh
