#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "boyd14/numerics/complex.hpp"

namespace boyd14::exact {

// Dense univariate polynomial over Q, coefficients stored low degree first.
// Always trimmed: the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const mpq_class& constant);  // NOLINT: constants promote implicitly
  QPoly(long constant) : QPoly(mpq_class(constant)) {}
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly monomial(unsigned degree, const mpq_class& c = 1);
  static QPoly x() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  mpq_class operator[](size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  QPoly& operator+=(const QPoly& b);
  QPoly& operator-=(const QPoly& b);
  QPoly& operator*=(const QPoly& b);
  QPoly operator-() const;

  QPoly derivative() const;
  QPoly monic() const;
  // Substitute x -> x^e.
  QPoly inflate(unsigned e) const;
  mpq_class eval(const mpq_class& x) const;
  numerics::Complex eval(const numerics::Complex& x) const;

  // Ascending-order text such as "1+2*g-g^2".
  std::string to_string(std::string_view var) const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

// Euclidean division; throws std::domain_error on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // quotient
QPoly operator%(const QPoly& a, const QPoly& b);  // remainder

// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
// (g, s, t) with s*a + t*b = g, g monic.
std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b);

}  // namespace boyd14::exact
