#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "boyd14/exact/field.hpp"

namespace boyd14::curves {

using exact::FieldPtr;
using exact::Scalar;

struct SingularCurve : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The two Mahler families: n is y^3+z^3+1-kyz, g is (1+y)(1+z)(y+z)-kyz.
enum class Family { none, n, g };

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;
class Point;

// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 over an exact field.
class Curve : public std::enable_shared_from_this<Curve> {
 public:
  static CurvePtr weierstrass(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4,
                              const Scalar& a6, std::string descriptor = "");
  // D(a1,a3): Y^2 + a1 XY + a3 Y = X^3.
  static CurvePtr deuring(const Scalar& a1, const Scalar& a3);
  // SW(a,b): y^2 = x^3 + a x + b.
  static CurvePtr short_weierstrass(const Scalar& a, const Scalar& b);
  // E_n(k) = D(k+6, k^2+3k+9) and E_g(k) = D(k-2, k).
  static CurvePtr family_n(const Scalar& k);
  static CurvePtr family_g(const Scalar& k);

  // Same curve with coefficients promoted into `f` (a larger field).
  CurvePtr over(const FieldPtr& f) const;

  const FieldPtr& field() const { return field_; }
  const Scalar& a1() const { return a_[0]; }
  const Scalar& a2() const { return a_[1]; }
  const Scalar& a3() const { return a_[2]; }
  const Scalar& a4() const { return a_[3]; }
  const Scalar& a6() const { return a_[4]; }
  Scalar b2() const;
  Scalar b4() const;
  Scalar b6() const;
  Scalar b8() const;
  Scalar c4() const;
  Scalar c6() const;
  Scalar discriminant() const;

  Family family() const { return family_; }
  // The family parameter; throws if family() == none.
  const Scalar& k() const;
  bool is_deuring() const;
  const std::string& descriptor() const { return descriptor_; }

  bool contains(const Scalar& x, const Scalar& y) const;
  Point zero() const;
  Point point(const Scalar& x, const Scalar& y) const;
  // The other root Y for a given X, i.e. -Y - a1 X - a3.
  Scalar negate_y(const Scalar& x, const Scalar& y) const;

  // Named points: "0", "P", "-P", "2P", "Q", "P+Q", "P-Q" for the families;
  // on E_g(1) over Q(zeta7) also "A", "Q'", "Q''". E_n's Q needs Q(zeta3).
  Point named(std::string_view name) const;

  friend bool operator==(const Curve& a, const Curve& b);

  Curve(FieldPtr field, std::array<Scalar, 5> a, std::string descriptor, Family family, std::optional<Scalar> k);

 private:
  FieldPtr field_;
  std::array<Scalar, 5> a_;
  std::string descriptor_;
  Family family_;
  std::optional<Scalar> k_;
};

class Point {
 public:
  Point() = default;  // detached; only for containers
  static Point infinity(CurvePtr curve);
  // Validates the curve equation exactly.
  Point(CurvePtr curve, Scalar x, Scalar y);

  const CurvePtr& curve() const { return curve_; }
  bool is_zero() const { return inf_; }
  const Scalar& x() const;
  const Scalar& y() const;

  Point operator-() const;
  Point operator+(const Point& q) const;
  Point operator-(const Point& q) const { return *this + (-q); }
  Point& operator+=(const Point& q) { return *this = *this + q; }
  // n*p by double-and-add; negative n allowed.
  Point times(long n) const;

  // Exact order, or nullopt if it exceeds `bound`.
  std::optional<int> order(int bound = 64) const;

  // "(X,Y)" in the field's text form, or "0".
  std::string to_string() const;

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Total order on serializations; used for canonical representatives.
  friend bool operator<(const Point& a, const Point& b) { return a.to_string() < b.to_string(); }

 private:
  CurvePtr curve_;
  bool inf_ = true;
  Scalar x_, y_;
};

Point operator*(long n, const Point& p);

// Descriptors: "D(a1,a3)", "SW(a,b)", "W(a1,a2,a3,a4,a6)", "Eg(k)", "En(k)".
// Arguments are parsed in `field` (use Q(k) for a symbolic parameter).
CurvePtr parse_curve(std::string_view text, const FieldPtr& field = exact::Field::rationals());

// y^2 = x^3 + A x + B with x = X + b2/12, y = Y + (a1 X + a3)/2, which
// carries dX/(2Y + a1 X + a3) to dx/(2y).
struct ShortModel {
  CurvePtr source;
  CurvePtr target;
  Scalar x_shift;  // b2/12
  Point to_short(const Point& p) const;
  Point from_short(const Point& p) const;
  // Lines are written y + s x + t = 0 downstairs and Y + s' X + t' = 0
  // upstairs; s = s' + slope_shift with slope_shift = -a1/2.
  Scalar slope_shift() const;
};
ShortModel to_short_weierstrass(const CurvePtr& c);

// Plane coordinates (y, z) of a point on E_n(k) or E_g(k); nullopt where the
// birational map has a pole (the plane point is at infinity).
std::optional<std::pair<Scalar, Scalar>> deuring_to_plane(const Point& p);
// Image in the Deuring model of an affine plane point on the family curve.
Point plane_to_deuring(const CurvePtr& c, const Scalar& y, const Scalar& z);

// Deuring model for the family plus images of its distinguished plane points.
struct PlaneImage {
  CurvePtr curve;
  std::map<std::string, Point> points;  // plane point text -> image
};
PlaneImage plane_to_deuring(Family family, const Scalar& k);

// The value of the family polynomial P_k(y, z).
Scalar family_polynomial(Family family, const Scalar& k, const Scalar& y, const Scalar& z);

}  // namespace boyd14::curves

template <>
struct std::hash<boyd14::curves::Point> {
  size_t operator()(const boyd14::curves::Point& p) const { return std::hash<std::string>{}(p.to_string()); }
};
