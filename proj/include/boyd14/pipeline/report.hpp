#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "boyd14/numerics/real.hpp"

namespace boyd14::pipeline {

using numerics::Real;

inline constexpr const char* kReportSchema = "boyd14.report/1";

// One numeric claim: both comparands, how they were obtained, and the bar.
struct Comparison {
  std::string name;
  std::string lhs_expr;
  std::string rhs_expr;
  Real lhs;
  Real rhs;
  double tolerance = 0;
  bool relative = true;

  Real abs_diff() const;
  Real rel_diff() const;
  bool pass() const;
};

struct ExactCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;  // "verify boyd", "verify keystone", "search"
  std::string subject;
  unsigned digits = 0;
  nlohmann::json precision = nlohmann::json::object();
  std::vector<Comparison> checks;
  std::vector<ExactCheck> exact;
  nlohmann::json certificates = nlohmann::json::array();
  nlohmann::json extra = nlohmann::json::object();
  double wall_seconds = 0;

  bool ok() const;
  // Names of failing checks, numeric first.
  std::vector<std::string> failures() const;
  // Differences are recomputed here from lhs and rhs; nothing derived is stored.
  nlohmann::json to_json() const;
};

// Enough decimal digits to read back the same binary value.
std::string exact_decimal(const Real& x);

}  // namespace boyd14::pipeline
