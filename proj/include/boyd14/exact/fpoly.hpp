#pragma once

#include <vector>

#include "boyd14/exact/field.hpp"

namespace boyd14::exact {

// Univariate polynomial with coefficients in an exact field, low degree first.
class FPoly {
 public:
  FPoly() : field_(Field::rationals()) {}
  explicit FPoly(FieldPtr field) : field_(std::move(field)) {}
  FPoly(FieldPtr field, std::vector<Scalar> coeffs);
  FPoly(const Scalar& constant);  // NOLINT: constants promote
  static FPoly x(FieldPtr field);
  static FPoly monomial(FieldPtr field, unsigned degree, const Scalar& c);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar operator[](size_t i) const { return i < c_.size() ? c_[i] : Scalar(field_, mpq_class(0)); }
  Scalar lead() const { return c_.empty() ? Scalar(field_, mpq_class(0)) : c_.back(); }

  FPoly& operator+=(const FPoly& b);
  FPoly& operator-=(const FPoly& b);
  FPoly& operator*=(const FPoly& b);
  FPoly operator-() const;

  FPoly derivative() const;
  FPoly monic() const;
  Scalar eval(const Scalar& x) const;
  // Coefficientwise image under an embedding of the base field.
  std::vector<numerics::Complex> embed(unsigned index, unsigned bits) const;
  // Apply a coefficient map landing in `target` (specialise k, apply Galois).
  template <class F>
  FPoly map(FieldPtr target, F&& f) const {
    std::vector<Scalar> r;
    for (auto& c : c_) r.push_back(f(c).in(target));
    return FPoly(std::move(target), std::move(r));
  }

  std::string to_string(std::string_view var = "X") const;
  friend bool operator==(const FPoly& a, const FPoly& b);

 private:
  void trim();
  FieldPtr field_;
  std::vector<Scalar> c_;
};

FPoly operator+(FPoly a, const FPoly& b);
FPoly operator-(FPoly a, const FPoly& b);
FPoly operator*(const FPoly& a, const FPoly& b);
std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b);
FPoly operator/(const FPoly& a, const FPoly& b);
FPoly operator%(const FPoly& a, const FPoly& b);
FPoly gcd(FPoly a, FPoly b);  // monic
FPoly pow(const FPoly& a, unsigned n);

// Rational function num/den over an exact field, reduced and with monic den.
// Used to push a symbolic X through the isogeny formulas.
class FRat {
 public:
  FRat() : FRat(Scalar(0L)) {}
  FRat(const Scalar& c) : num_(c), den_(Scalar(c.field(), mpq_class(1))) {}  // NOLINT
  FRat(FPoly num);  // NOLINT
  FRat(FPoly num, FPoly den);

  const FPoly& num() const { return num_; }
  const FPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FRat& operator+=(const FRat& b);
  FRat& operator-=(const FRat& b);
  FRat& operator*=(const FRat& b);
  FRat& operator/=(const FRat& b);
  FRat operator-() const;
  Scalar eval(const Scalar& x) const;

  friend bool operator==(const FRat& a, const FRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();
  FPoly num_;
  FPoly den_;
};

FRat operator+(FRat a, const FRat& b);
FRat operator-(FRat a, const FRat& b);
FRat operator*(FRat a, const FRat& b);
FRat operator/(FRat a, const FRat& b);

struct FieldRoot {
  Scalar value;
  int multiplicity;
};

struct FieldRoots {
  std::vector<FieldRoot> roots;
  // f divided by prod (X - r)^m; degree 0 iff f splits completely.
  FPoly cofactor;
};

// Roots of f lying in its coefficient field (Q or a number-field quotient).
// Numeric roots under every embedding are matched, the candidate is solved
// from the Vandermonde system, rationalised, and verified exactly, so every
// returned root is exact; a root can only be missed if its height exceeds
// what `bits` can resolve. Throws std::domain_error over Q(t).
FieldRoots roots_in_field(const FPoly& f, unsigned bits = 320);

// Best rational approximation with |x - p/q| < 2^tol_exp by continued fractions.
mpq_class rationalize(const numerics::Real& x, long tol_exp);

}  // namespace boyd14::exact
