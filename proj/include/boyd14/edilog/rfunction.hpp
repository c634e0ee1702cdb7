#pragma once

#include "boyd14/curves/isogeny.hpp"
#include "boyd14/divisors/divisor.hpp"
#include "boyd14/uniformization/lattice.hpp"

namespace boyd14::edilog {

using numerics::Complex;
using numerics::Real;

enum class Method { lattice, accelerated };

struct RValue {
  Complex value;
  Method method;
  Real error_estimate;
};

// R(tau, a tau + b) by the defining double sum over max(|m|, |n|) <= M,
// in extended double precision. The error bound 8 y^2 / (pi c^3 M) comes from
// |m tau + n| >= c max(|m|, |n|).
RValue r_lattice(const Complex& tau, const Real& a, const Real& b, int M);

// Same function to the precision of tau. The real part is the Bloch-Wigner
// sum over the Tate curve; the imaginary part comes from Poisson summation in
// n, whose real part is kept as an independent check on the error estimate.
RValue r_fast(const Complex& tau, const Real& a, const Real& b);

struct ImaginaryResidual : std::runtime_error {
  ImaginaryResidual(const std::string& what, Real im) : std::runtime_error(what), imag(std::move(im)) {}
  Real imag;
};

// Which differential R is taken against.
enum class Form {
  du,     // R_E(x) = R(tau, x)
  omega,  // R_{E,omega} = Omega_R R_E for omega = dX/(2Y + a1 X + a3)
};

struct DivisorOptions {
  Form form = Form::du;
  mpq_class scale = 1;  // R_{E, scale * form}
  int embedding = -1;   // -1: principal
  bool require_real = true;
};

struct DivisorValue {
  Complex value;
  Real error_estimate;
};

// Sum of coeff * R(tau, log p) over the divisor. With require_real, throws
// ImaginaryResidual when |Im| exceeds the error estimate plus 2^-(bits/2).
DivisorValue r_divisor_value(const divisors::Divisor& d, unsigned bits, const DivisorOptions& opts = {});
// Real part of the above.
Real r_divisor(const divisors::Divisor& d, unsigned bits, const DivisorOptions& opts = {});
// R_E of a single point.
Real r_point(const curves::Point& p, unsigned bits, Form form = Form::du);

// |R_{E,omega}(x) - sum over phi^-1(x) of R_{E',phi^* omega}(x')|, with
// phi^* omega = lambda omega' read off the isogeny. Throws
// curves::FiberNotRational when the fiber is not defined over the source field.
Real check_distribution(const curves::Isogeny& iso, const curves::Point& x, unsigned bits);

}  // namespace boyd14::edilog
