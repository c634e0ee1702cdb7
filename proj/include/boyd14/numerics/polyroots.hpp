#pragma once

#include <vector>

#include "boyd14/numerics/complex.hpp"

namespace boyd14::numerics {

struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All complex roots of sum_i coeffs[i] z^i, computed by Aberth-Ehrlich
// simultaneous iteration at `bits` precision. Exactly-zero leading
// coefficients are dropped first, so the result has the true degree.
// Throws RootFindingError if the iteration does not settle.
std::vector<Complex> polyroots(const std::vector<Complex>& coeffs, unsigned bits);

// Convenience overload for real coefficients.
std::vector<Complex> polyroots(const std::vector<Real>& coeffs, unsigned bits);

// Horner evaluation.
Complex polyval(const std::vector<Complex>& coeffs, const Complex& z);

}  // namespace boyd14::numerics
