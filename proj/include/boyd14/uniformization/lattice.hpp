#pragma once

#include <memory>

#include "boyd14/curves/curve.hpp"
#include "boyd14/numerics/complex.hpp"

namespace boyd14::uniformization {

using numerics::Complex;
using numerics::Real;

// Period lattice of omega = dX/(2Y + a1 X + a3) on a curve over R, written as
// Omega_R * <1, tau>. tau lies in iR (two real components) or 1/2 + iR (one).
struct RealLattice {
  Complex tau;
  Real omega_real;  // real period, > 0
  int components;   // 1 or 2
  Complex omega1() const { return Complex(omega_real); }
  Complex omega2() const { return tau * omega_real; }
  unsigned precision() const { return omega_real.precision(); }
};

struct NotReal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// AGM periods of the short model. Coefficients are embedded with the field's
// principal embedding and must be real there. Results are cached per
// (curve, bits).
std::shared_ptr<const RealLattice> lattice_of(const curves::CurvePtr& c, unsigned bits);

// Weierstrass p and p' for the lattice <1, tau> at u.
struct WeierstrassValue {
  Complex p;
  Complex dp;
};
WeierstrassValue weierstrass_p(const Complex& u, const Complex& tau);

struct EllipticLog {
  Real a;  // u = a tau + b with a, b in [0, 1)
  Real b;
  Real residual;  // |p(u)/omega^2 - x| after the last Newton step
  Complex u(const Complex& tau) const { return tau * a + Complex(b); }
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, Real residual) : std::runtime_error(what), residual(std::move(residual)) {}
  Real residual;
};

// u with P = (p(omega u), p'(omega u)/2) on the short model, reduced mod
// <1, tau>. The point is embedded with `embedding` (default: principal).
EllipticLog elliptic_log(const curves::Point& p, const RealLattice& lattice, int embedding = -1);

// Constant relating the Mahler measure to R on the Deuring model:
// family n: 1 for k > 3, -2 for k <= -1; family g: sign k.
int deninger_constant(curves::Family family, const mpq_class& k);

}  // namespace boyd14::uniformization
