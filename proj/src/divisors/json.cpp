#include "boyd14/divisors/json.hpp"

#include "boyd14/curves/json.hpp"

namespace boyd14::divisors {

nlohmann::json to_json(const Divisor& d, const curves::Subgroup* labels) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [key, t] : d.terms()) {
    nlohmann::json e{{"coeff", t.coeff}, {"point", curves::point_to_json(t.point)}};
    if (labels && labels->contains(t.point)) e["label"] = labels->label(t.point);
    terms.push_back(e);
  }
  return {{"curve", curves::curve_to_json(*d.curve())}, {"terms", terms}};
}

Divisor divisor_from_json(const nlohmann::json& j, const CurvePtr& curve) {
  FormalSum raw(curve);
  for (auto& e : j.at("terms")) raw.add(curves::point_from_json(e.at("point"), curve), e.at("coeff").get<long>());
  return normalize(raw);
}

}  // namespace boyd14::divisors
