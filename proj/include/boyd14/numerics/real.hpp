#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace boyd14::numerics {

// Working precision used when a caller does not ask for one.
inline constexpr unsigned kDefaultBits = 192;

// Bits needed to carry `digits` decimal digits plus a guard margin.
unsigned bits_for_digits(unsigned digits);

/// Arbitrary-precision real (HPReal). Every value carries its own precision;
/// the result of a binary operation is rounded to the smaller of the two.
class Real {
 public:
  // Zero at the default precision.
  Real();
  static Real zero(unsigned bits);
  Real(long value, unsigned bits);
  explicit Real(double value, unsigned bits = kDefaultBits);
  Real(const mpq_class& value, unsigned bits);
  Real(const mpz_class& value, unsigned bits);
  Real(std::string_view decimal, unsigned bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  // Same numeric value, rounded to `bits`.
  Real with_precision(unsigned bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  long exponent() const;  // x = m * 2^exponent with 1/2 <= |m| < 1

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  mpq_class to_rational() const;
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 0) const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real floor(const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real sqr(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// Exponential integral Ei(x); for x < 0 this is -E1(-x).
Real eint(const Real& x);
Real gamma(const Real& x);

Real pi(unsigned bits);
Real euler_gamma(unsigned bits);
// 2^e at the given precision.
Real ldexp_one(long e, unsigned bits);

}  // namespace boyd14::numerics
