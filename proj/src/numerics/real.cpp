#include "boyd14/numerics/real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace boyd14::numerics {

namespace {

unsigned min_prec(const Real& a, const Real& b) { return std::min(a.precision(), b.precision()); }

}  // namespace

unsigned bits_for_digits(unsigned digits) {
  return static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Real::Real() {
  mpfr_init2(value_, kDefaultBits);
  mpfr_set_zero(value_, 1);
}

Real Real::zero(unsigned bits) {
  Real r(0L, bits);
  return r;
}

Real::Real(long value, unsigned bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, unsigned bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, unsigned bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, unsigned bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, unsigned bits) {
  mpfr_init2(value_, bits);
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("Real: cannot parse '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(unsigned bits) const {
  Real r = Real::zero(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() < precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() < precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() < precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() < precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (is_zero()) return 0;
  return mpfr_get_exp(value_);
}

mpq_class Real::to_rational() const {
  if (!is_finite()) throw std::domain_error("Real::to_rational: non-finite value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  return std::string(buf.data());
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real operator+(const Real& a, const Real& b) {
  Real r = Real::zero(min_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = Real::zero(min_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = Real::zero(min_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = Real::zero(min_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r = Real::zero(a.precision());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(static_cast<int>(std::min<std::streamsize>(os.precision(), 60)));
}

#define BOYD14_UNARY(name, fn)                  \
  Real name(const Real& x) {                    \
    Real r = Real::zero(x.precision());         \
    fn(r.get(), x.get(), MPFR_RNDN);            \
    return r;                                   \
  }

BOYD14_UNARY(abs, mpfr_abs)
BOYD14_UNARY(sqrt, mpfr_sqrt)
BOYD14_UNARY(exp, mpfr_exp)
BOYD14_UNARY(log, mpfr_log)
BOYD14_UNARY(sin, mpfr_sin)
BOYD14_UNARY(cos, mpfr_cos)
BOYD14_UNARY(sqr, mpfr_sqr)
BOYD14_UNARY(eint, mpfr_eint)
BOYD14_UNARY(gamma, mpfr_gamma)

#undef BOYD14_UNARY

Real floor(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = Real::zero(min_prec(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::zero(min_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(unsigned bits) {
  Real r = Real::zero(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real euler_gamma(unsigned bits) {
  Real r = Real::zero(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real ldexp_one(long e, unsigned bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace boyd14::numerics
