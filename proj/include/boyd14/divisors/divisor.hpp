#pragma once

#include <functional>
#include <map>
#include <string>

#include "boyd14/curves/curve.hpp"
#include "boyd14/curves/subgroup.hpp"

namespace boyd14::divisors {

using curves::CurvePtr;
using curves::Point;

struct Term {
  Point point;
  long coeff;
};

// Element of Z[E]: a finite formal sum of points, [0] included.
class FormalSum {
 public:
  explicit FormalSum(CurvePtr curve) : curve_(std::move(curve)) {}
  FormalSum(CurvePtr curve, std::initializer_list<std::pair<long, Point>> terms);

  const CurvePtr& curve() const { return curve_; }
  void add(const Point& p, long c);
  const std::map<std::string, Term>& terms() const { return terms_; }
  long degree() const;
  // sum of coeff * point in the group.
  Point evaluate() const;
  bool is_zero() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& b);
  FormalSum& operator-=(const FormalSum& b);
  FormalSum operator*(long c) const;
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend bool operator==(const FormalSum& a, const FormalSum& b);

 private:
  CurvePtr curve_;
  std::map<std::string, Term> terms_;
};

// [p] -> [-p].
FormalSum antipode(const FormalSum& a);
// sum a_i b_j [p_i + q_j].
FormalSum convolve(const FormalSum& a, const FormalSum& b);

// Element of Z[E]^- = Z[E] / ([p] + [-p]). Each class {p, -p} is stored under
// the representative with the smaller serialization; [0] is dropped and
// 2-torsion coefficients are reduced mod 2, both forced by the relation.
class Divisor {
 public:
  explicit Divisor(CurvePtr curve) : curve_(std::move(curve)) {}

  const CurvePtr& curve() const { return curve_; }
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of [p] (sign-adjusted if p is the non-canonical representative).
  long coeff(const Point& p) const;

  Divisor& operator+=(const Divisor& b);
  Divisor& operator-=(const Divisor& b);
  Divisor operator*(long c) const;
  Divisor operator-() const { return *this * -1; }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend bool operator==(const Divisor& a, const Divisor& b);

  // "6[P+Q] - 6[P]" using subgroup labels (falls back to coordinates).
  std::string to_string(const curves::Subgroup* labels = nullptr) const;

 private:
  friend Divisor normalize(const FormalSum& raw);
  void add_class(const Point& p, long c);
  CurvePtr curve_;
  std::map<std::string, Term> terms_;
};

Divisor normalize(const FormalSum& raw);
// Shorthand for normalize of a single weighted point list.
Divisor make_divisor(const CurvePtr& curve, std::initializer_list<std::pair<long, Point>> terms);

struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// beta({f, g}) = (f) * (g)^-, normalized. Both inputs must have degree 0.
Divisor beta(const FormalSum& div_f, const FormalSum& div_g);

// (y) and (z) of the plane coordinates on the Deuring model of a family.
// Family n needs Q(zeta3); a rational k is promoted automatically.
std::pair<FormalSum, FormalSum> coordinate_divisors(curves::Family family, const curves::Scalar& k);

}  // namespace boyd14::divisors
