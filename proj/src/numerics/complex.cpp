#include "boyd14/numerics/complex.hpp"

#include <ostream>

namespace boyd14::numerics {

std::string Complex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  std::string t = im.to_string(digits);
  if (!t.empty() && t[0] == '-') return s + " - " + t.substr(1) + "i";
  return s + " + " + t + "i";
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  *this = *this * rhs;
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

Complex& Complex::operator*=(long rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  // Scale by the larger component of b to avoid overflow in |b|^2.
  if (abs(b.re) >= abs(b.im)) {
    Real r = b.im / b.re;
    Real den = b.re + b.im * r;
    return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
  }
  Real r = b.re / b.im;
  Real den = b.re * r + b.im;
  return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
}

Complex operator*(Complex a, const Real& b) { return a *= b; }
Complex operator*(const Real& a, Complex b) { return b *= a; }
Complex operator/(Complex a, const Real& b) { return a /= b; }

Complex operator+(Complex a, const Real& b) {
  a.re += b;
  return a;
}

Complex operator-(Complex a, const Real& b) {
  a.re -= b;
  return a;
}

Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(Complex a, long b) { return a *= b; }
Complex operator*(long a, Complex b) { return b *= a; }
Complex operator/(Complex a, long b) { return {a.re / b, a.im / b}; }
Complex operator+(Complex a, long b) { return {a.re + b, a.im}; }
Complex operator-(Complex a, long b) { return {a.re - b, a.im}; }
Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
Complex operator/(long a, const Complex& b) { return Complex(Real(a, b.precision())) / b; }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << z.to_string(static_cast<int>(std::min<std::streamsize>(os.precision(), 60)));
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return sqr(z.re) + sqr(z.im); }

Real abs(const Complex& z) {
  Real r = Real::zero(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) { return polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex::zero(z.precision());
  // Stable form: t = sqrt((|z| + |re|)/2).
  Real t = sqrt((abs(z) + abs(z.re)) / 2L);
  if (z.re.sign() >= 0) return {t, z.im / (t * 2L)};
  Real s = z.im.sign() < 0 ? -t : t;
  return {abs(z.im) / (t * 2L), s};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1L, z.precision())) / pow(z, -n);
  Complex result(Real(1L, z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex polar(const Real& r, const Real& theta) {
  Real c = Real::zero(theta.precision());
  Real s = Real::zero(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {r * c, r * s};
}

Complex expi(const Real& theta) { return polar(Real(1L, theta.precision()), theta); }

Complex exp2pii(const Complex& z) {
  Real twopi = pi(z.precision()) * 2L;
  return polar(exp(-(twopi * z.im)), twopi * z.re);
}

}  // namespace boyd14::numerics
