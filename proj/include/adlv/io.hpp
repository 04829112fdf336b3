#pragma once

#include "adlv/enumerate.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace adlv {

using json = nlohmann::ordered_json;

// Canonical JSON form of an extended EL-chart (schema_version "1"), with the
// derived summary fields (type, hodge, cyclic, v_dim) recomputed on save so
// that save(load(x)) is byte-identical.
json chart_to_json(const ExtendedELChart& ext);
std::string chart_to_json_line(const ExtendedELChart& ext);

// Parses, rebuilds and fully re-validates; throws std::invalid_argument on
// malformed or axiom-violating input.
ExtendedELChart chart_from_json(const json& doc);
ExtendedELChart chart_from_json_line(const std::string& line);

// Row-major integer rendering of a cocharacter, e.g. [[0,1],[0,0]].
json gcochar_to_json(const GCocharacter& mu);
GCocharacter gcochar_from_json(const json& doc);

// SVG figure of the two polygons with the counted lattice points marked.
// 40 px per lattice unit, origin bottom-left, y up. v2 must be integral and
// dominance-above v1.
std::string polygon_svg(const RelCocharacter& v1, const RelCocharacter& v2);

}  // namespace adlv
