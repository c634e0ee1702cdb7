#pragma once

#include <stdexcept>

#include "boyd14/numerics/complex.hpp"

namespace boyd14::numerics {

// A value together with an estimate of its absolute error.
struct Estimate {
  Real value;
  Real error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bernoulli number B_n with B_1 = -1/2. Cached; safe to call concurrently.
mpq_class bernoulli(unsigned n);

// Dilogarithm on the principal branch (cut along [1, inf)).
Complex li2(const Complex& z);

// Bloch-Wigner D(z) = Im Li2(z) + arg(1 - z) log|z|.
// Throws DomainError at z = 0 and z = 1. If `precision_loss` is given it is
// set when cancellation between the two terms exceeds the guard bits.
Real bloch_wigner(const Complex& z, bool* precision_loss = nullptr);

// Upper incomplete gamma Gamma(s, x) for integer s in {0, 1, 2, 3} and x > 0.
// s = 0 is the exponential integral E1(x).
Real incomplete_gamma_upper(int s, const Real& x);

// Arithmetic-geometric mean of two positive reals.
Real agm(const Real& a, const Real& b);

}  // namespace boyd14::numerics
