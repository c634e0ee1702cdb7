#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "boyd14/numerics/special.hpp"

namespace boyd14::numerics {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// n-point rule at the given precision; cached per (n, bits).
std::shared_ptr<const GaussLegendre> gauss_legendre(unsigned n, unsigned bits);

struct QuadratureOptions {
  unsigned order = 24;      // points per panel
  unsigned max_depth = 40;  // bisection depth per initial panel
  unsigned bits = kDefaultBits;
};

// Adaptive Gauss-Legendre on [a, b]. A panel is accepted when the n-point
// value over it agrees with the sum over its two halves to within `tol`
// scaled by the panel's share of the whole interval. Returns the integral and
// the accumulated panel disagreement as error estimate.
Estimate integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                   const Real& tol, const QuadratureOptions& opts = {});

// Same over consecutive panels [p0,p1], [p1,p2], ...; used to place known
// kinks of the integrand on panel boundaries.
Estimate integrate_panels(const std::function<Real(const Real&)>& f, const std::vector<Real>& breaks,
                          const Real& tol, const QuadratureOptions& opts = {});

}  // namespace boyd14::numerics
