#pragma once

#include "boyd14/curves/curve.hpp"
#include <json.hpp>

namespace boyd14::curves {

// {"X": "...", "Y": "..."} in the field's text form, or the string "O".
nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j, const CurvePtr& curve);
// {"descriptor": "...", "field": "...", "a": [a1, a2, a3, a4, a6]}
nlohmann::json curve_to_json(const Curve& c);

}  // namespace boyd14::curves
