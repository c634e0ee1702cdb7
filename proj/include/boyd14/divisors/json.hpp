#pragma once

#include "boyd14/divisors/divisor.hpp"
#include <json.hpp>

namespace boyd14::divisors {

// {"curve": {...}, "terms": [{"coeff": c, "point": {...}, "label": "..."}]}
// Labels are included when a subgroup is supplied; parsing ignores them.
nlohmann::json to_json(const Divisor& d, const curves::Subgroup* labels = nullptr);
Divisor divisor_from_json(const nlohmann::json& j, const CurvePtr& curve);

}  // namespace boyd14::divisors
