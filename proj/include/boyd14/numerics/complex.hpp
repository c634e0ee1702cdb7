#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "boyd14/numerics/real.hpp"

namespace boyd14::numerics {

// HPComplex: a pair of Reals. Precision is the smaller of the two parts.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(const Real& real) : re(real), im(Real::zero(real.precision())) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  static Complex zero(unsigned bits) { return {Real::zero(bits), Real::zero(bits)}; }
  static Complex from(std::complex<double> z, unsigned bits) {
    return {Real(z.real(), bits), Real(z.imag(), bits)};
  }
  // The imaginary unit.
  static Complex i(unsigned bits) { return {Real::zero(bits), Real(1L, bits)}; }

  unsigned precision() const { return std::min(re.precision(), im.precision()); }
  Complex with_precision(unsigned bits) const { return {re.with_precision(bits), im.with_precision(bits)}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
  std::string to_string(int digits = 0) const;

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex& operator*=(long rhs);
  Complex operator-() const { return {-re, -im}; }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(Complex a, const Real& b);
Complex operator*(const Real& a, Complex b);
Complex operator/(Complex a, const Real& b);
Complex operator+(Complex a, const Real& b);
Complex operator-(Complex a, const Real& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(Complex a, long b);
Complex operator*(long a, Complex b);
Complex operator/(Complex a, long b);
Complex operator+(Complex a, long b);
Complex operator-(Complex a, long b);
Complex operator-(long a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);
Complex operator/(long a, const Complex& b);

std::ostream& operator<<(std::ostream& os, const Complex& z);

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);   // principal value in (-pi, pi]
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);
Complex polar(const Real& r, const Real& theta);
// exp(i*theta)
Complex expi(const Real& theta);
// exp(2*pi*i*z)
Complex exp2pii(const Complex& z);

}  // namespace boyd14::numerics
