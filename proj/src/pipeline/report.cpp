#include "boyd14/pipeline/report.hpp"

#include <cmath>

namespace boyd14::pipeline {

Real Comparison::abs_diff() const { return numerics::abs(lhs - rhs); }

Real Comparison::rel_diff() const {
  Real scale = numerics::max(numerics::abs(lhs), numerics::abs(rhs));
  if (scale.sign() == 0) return abs_diff();
  return abs_diff() / scale;
}

bool Comparison::pass() const {
  Real d = relative ? rel_diff() : abs_diff();
  return d < Real(tolerance, d.precision());
}

bool Report::ok() const { return failures().empty(); }

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (auto& c : checks)
    if (!c.pass()) out.push_back(c.name);
  for (auto& e : exact)
    if (!e.pass) out.push_back(e.name);
  return out;
}

std::string exact_decimal(const Real& x) { return x.to_string(static_cast<int>(x.precision() * 0.30103) + 3); }

namespace {

std::string shown(const Real& x, unsigned digits) { return x.to_string(static_cast<int>(digits) + 5); }

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["subject"] = subject;
  j["digits"] = digits;
  j["precision"] = precision;
  nlohmann::json cs = nlohmann::json::array();
  for (auto& c : checks) {
    cs.push_back({{"name", c.name},
                  {"lhs", {{"expr", c.lhs_expr}, {"value", shown(c.lhs, digits)}}},
                  {"rhs", {{"expr", c.rhs_expr}, {"value", shown(c.rhs, digits)}}},
                  {"abs_diff", c.abs_diff().to_string(4)},
                  {"rel_diff", c.rel_diff().to_string(4)},
                  {"tolerance", c.tolerance},
                  {"mode", c.relative ? "relative" : "absolute"},
                  {"pass", c.pass()}});
  }
  j["checks"] = cs;
  nlohmann::json es = nlohmann::json::array();
  for (auto& e : exact) es.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
  j["exact"] = es;
  j["certificates"] = certificates;
  if (!extra.empty()) j["result"] = extra;
  j["ok"] = ok();
  j["timing"] = {{"wall_seconds", std::round(wall_seconds * 1000) / 1000}};
  return j;
}

}  // namespace boyd14::pipeline
