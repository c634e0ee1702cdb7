#pragma once

#include <string>

#include "boyd14/pipeline/report.hpp"

namespace boyd14::pipeline {

struct SearchRequest {
  std::string curve = "Eg(1)";  // parse_curve descriptor, or "y^2=x^3+b" style SW(a,b)
  std::string group = "P";      // comma list: named points, "(x,y)", "2tors", "3tors"
  std::string field = "Q";
  unsigned digits = 25;         // for the numeric check of each certificate
  bool evaluate = true;
};

// Parallel-pair search over the subgroup. Over Q(k) the result is the slope
// table and the rational k where slopes coincide; over a number field every
// pair becomes a certificate whose R-value is checked numerically.
Report run_search(const SearchRequest& req);

}  // namespace boyd14::pipeline
