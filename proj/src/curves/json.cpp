#include "boyd14/curves/json.hpp"

namespace boyd14::curves {

nlohmann::json point_to_json(const Point& p) {
  if (p.is_zero()) return "O";
  return {{"X", p.x().to_string()}, {"Y", p.y().to_string()}};
}

Point point_from_json(const nlohmann::json& j, const CurvePtr& curve) {
  if (j.is_string() && (j == "O" || j == "0")) return curve->zero();
  const FieldPtr& f = curve->field();
  return curve->point(exact::parse_scalar(j.at("X").get<std::string>(), f),
                      exact::parse_scalar(j.at("Y").get<std::string>(), f));
}

nlohmann::json curve_to_json(const Curve& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const Scalar* s : {&c.a1(), &c.a2(), &c.a3(), &c.a4(), &c.a6()}) a.push_back(s->to_string());
  return {{"descriptor", c.descriptor()}, {"field", c.field()->name()}, {"a", a}};
}

}  // namespace boyd14::curves
