#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cobordia/morphism.hpp"

namespace cobordia {

/// The interchange schema, with keys emitted in this order:
/// {"dom": "+-", "cod": "", "strands": [["d1","d2"], ...], "circles": 0}
/// Endpoints encode side and 1-based index as "dN"/"cN"; strands are listed
/// in canonical order, so serialization is deterministic.
nlohmann::ordered_json morphism_to_json(const DiagMorphism& m);

std::string morphism_to_json_text(const DiagMorphism& m);

/// Strict parse of the schema above: unknown keys, wrong types, malformed
/// endpoint labels and out-of-range indices all raise SchemaError carrying
/// the JSON path of the offending element; a structurally invalid pairing
/// raises ValidationError.
DiagMorphism morphism_from_json(const nlohmann::json& j);

DiagMorphism morphism_from_json_text(std::string_view text);

}  // namespace cobordia
