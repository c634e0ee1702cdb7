#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boyd14/numerics/special.hpp"

namespace boyd14::modforms {

using numerics::Real;

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LValue {
  Real value;
  Real error;
  int root_number;  // sign in Lambda(s) = eps Lambda(2 - s)
  int terms;        // coefficients used by the longer truncation
};

struct LOptions {
  std::optional<int> root_number;  // detected when empty
  double t0 = 0;                   // split point; 0 means 1/sqrt(N)
};

// Number of coefficients l_value needs at this precision and split point.
int l_value_terms(long level, unsigned bits, double t0 = 0);

// L(f, s), s in {1, 2}, for a weight 2 newform of level N with coefficients
// a[1..] (a[0] ignored), by the smoothed functional equation
//   Lambda(s) = sum a_n [(A/2 pi n)^s G(s, 2 pi n t0/A) + eps (A/2 pi n)^(2-s) G(2-s, 2 pi n/(t0 A))],
// A = sqrt N. The sum is taken to l_value_terms() and to twice that; a
// disagreement above 2^(8-bits) throws TruncationError.
LValue l_value(const std::vector<mpq_class>& a, long level, int s, unsigned bits, const LOptions& opts = {});

}  // namespace boyd14::modforms
