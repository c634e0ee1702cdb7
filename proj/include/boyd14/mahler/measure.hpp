#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "boyd14/curves/curve.hpp"
#include "boyd14/exact/qpoly.hpp"
#include "boyd14/numerics/special.hpp"

namespace boyd14::mahler {

using numerics::Real;

// Laurent polynomial in y, z with rational coefficients.
class BivariatePoly {
 public:
  using Exponent = std::pair<int, int>;  // (deg y, deg z)

  BivariatePoly() = default;
  static BivariatePoly constant(const mpq_class& c);
  static BivariatePoly y();
  static BivariatePoly z();
  // "y^3+z^3+1-5*y*z", "(1+y)*(1+z)*(y+z)-7*y*z"; juxtaposition multiplies.
  static BivariatePoly parse(std::string_view text);
  // [{"y": i, "z": j, "c": "p/q"}, ...]
  static BivariatePoly from_json(const nlohmann::json& j);

  const std::map<Exponent, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(int i, int j) const;
  void add(int i, int j, const mpq_class& c);

  BivariatePoly& operator+=(const BivariatePoly& b);
  BivariatePoly& operator-=(const BivariatePoly& b);
  BivariatePoly operator*(const BivariatePoly& b) const;
  BivariatePoly operator*(const mpq_class& c) const;
  BivariatePoly operator-() const { return *this * mpq_class(-1); }
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
  BivariatePoly pow(unsigned n) const;

  BivariatePoly swap_variables() const;
  // y -> 1/y (a Laurent monomial change; m is unchanged).
  BivariatePoly invert_y() const;
  // Shift exponents so the smallest y- and z-degrees are 0.
  BivariatePoly normalized() const;

  // Coefficients of z^j as polynomials in y, for a normalized polynomial.
  std::vector<exact::QPoly> coefficients_in_z() const;
  static BivariatePoly from_coefficients_in_z(const std::vector<exact::QPoly>& a);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::map<Exponent, mpq_class> terms_;
};

struct MahlerResult {
  Real value;
  Real error;
  // True when P has zeros on the torus; the integrand then has kinks (or
  // integrable singularities) at the listed theta in [0, pi].
  bool vanishes_on_torus = false;
  std::vector<double> breakpoints;
};

struct MahlerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m(P) by Jensen's formula in z and adaptive quadrature in theta.
MahlerResult mahler_measure(const BivariatePoly& p, unsigned digits = 15);

// y^3 + z^3 + 1 - k y z or (1 + y)(1 + z)(y + z) - k y z.
BivariatePoly family_polynomial(curves::Family family, const mpq_class& k);
MahlerResult family_measure(curves::Family family, const mpq_class& k, unsigned digits = 15);

struct Classification {
  bool singular;
  int components;
  bool in_K;  // k lies in the image of the torus under the family's function
};
Classification classify(curves::Family family, const mpq_class& k);

// Res_z(a, b) for polynomials given by their z-coefficients in Q[y].
exact::QPoly resultant_z(const std::vector<exact::QPoly>& a, const std::vector<exact::QPoly>& b);

}  // namespace boyd14::mahler
