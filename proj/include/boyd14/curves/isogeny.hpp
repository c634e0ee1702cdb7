#pragma once

#include <memory>
#include <vector>

#include "boyd14/curves/curve.hpp"
#include "boyd14/exact/fpoly.hpp"

namespace boyd14::curves {

// Coordinate formulas of an isogeny, X' depending on X alone.
class RationalMap {
 public:
  virtual ~RationalMap() = default;
  virtual Scalar x(const Scalar& X) const = 0;
  virtual Scalar y(const Scalar& X, const Scalar& Y) const = 0;
  // X' as an element of K(X), used to build fiber polynomials.
  virtual exact::FRat x_symbolic(const FieldPtr& field) const = 0;
  // phi^* omega' / omega, read off from the expansion at O.
  virtual Scalar pullback(const Curve& source) const = 0;
};

struct Isogeny {
  std::string name;
  CurvePtr source;
  CurvePtr target;
  int degree;
  Scalar lambda;  // phi^* omega_target = lambda * omega_source
  std::string kernel;  // e.g. "<Q>"
  // Present when the generator is defined over the source field.
  std::optional<Point> kernel_generator;
  std::shared_ptr<const RationalMap> map;

  // Image of a point; poles of the formulas go to O.
  Point apply(const Point& p) const;
};

// D(k+6, k^2+3k+9) -> D(k, 1), (X', Y') = (-yz, y^3), kernel generated by Q.
Isogeny rho3_n(const Scalar& k);
// E_g(k) -> D(-k-4, -k^2) -> E_g(-8/k), kernel <Q>. The second step is
// (X, Y) -> (4X/k^2, 8Y/k^3), i.e. u = k/2 in (X, Y) = (u^2 X'', u^3 Y'').
Isogeny rho2_g(const Scalar& k);
// E_g(1) -> E_g(7) over `field` (Q or an extension), kernel <P>.
Isogeny rho3_g1_to_g7(const FieldPtr& field = exact::Field::rationals());
// Multiplication by 2 on any curve.
Isogeny multiplication_by_2(const CurvePtr& c);

// "rho3_n(k)", "rho2_g(k)", "rho3_g1_to_g7", "mul2".
Isogeny builtin_isogeny(std::string_view name, const Scalar& parameter = Scalar(0L));

struct FiberNotRational : std::runtime_error {
  FiberNotRational(const std::string& what, exact::FPoly factor) : std::runtime_error(what), factor(std::move(factor)) {}
  exact::FPoly factor;
};

// All preimages of `target` in the field of the isogeny's source curve.
// Throws FiberNotRational (with the unsplit factor) if the fiber does not
// split there.
std::vector<Point> preimages(const Isogeny& iso, const Point& target);

// Points p with n p = 0 (n in {2, 3, 4}) defined over the curve's field,
// found from the division polynomials.
std::vector<Point> ntors(const CurvePtr& c, int n);

}  // namespace boyd14::curves
