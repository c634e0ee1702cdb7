#include "boyd14/edilog/rfunction.hpp"

#include <cmath>
#include <complex>

#include "boyd14/numerics/special.hpp"

namespace boyd14::edilog {

using numerics::pi;

namespace {

using cld = std::complex<long double>;

// Neumaier-compensated running sum.
struct Compensated {
  long double sum = 0, carry = 0;
  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) carry += (sum - t) + x;
    else carry += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + carry; }
};

Real reduce_half(const Real& x) { return x - numerics::floor(x + Real(0.5, x.precision())); }

// B3(t) = t^3 - 3/2 t^2 + 1/2 t.
Real bernoulli3(const Real& t) { return t * t * t - t * t * Real(1.5, t.precision()) + t / 2L; }

Complex times_i(const Complex& z) { return {-z.im, z.re}; }

// Sum of D(q^n z) over n in Z.
Real bloch_wigner_sum(const Complex& q, const Complex& z, const Real& eps) {
  Real s = numerics::bloch_wigner(z);
  Complex zi = Complex(Real(1L, z.precision())) / z;
  Complex qn = q;
  for (int n = 1; n < 1000000; ++n) {
    Complex x = qn * z, y = qn * zi;
    s += numerics::bloch_wigner(x) - numerics::bloch_wigner(y);
    if (abs(x) < eps && abs(y) < eps) break;
    qn *= q;
  }
  return s;
}

// sum over c in a + Z of the Poisson-dual terms; see r_fast.
Complex poisson_half(const Complex& tau, const Real& a, const Real& b, const Real& eps) {
  unsigned bits = tau.precision();
  Real y = tau.im;
  Real P = pi(bits);
  Real y4 = y * y * 4L;
  Complex tauc = conj(tau);
  Complex sum = Complex::zero(bits);
  long j0 = -numerics::floor(a).to_long();  // a + j0 in [0, 1)
  for (long j = j0;; ++j) {
    Real c = a + Real(j, bits);
    Complex e = numerics::exp2pii(-(tauc * c + b));
    sum += numerics::li2(e) / y4;
    if (abs(e) < eps) break;
  }
  for (long j = j0 - 1;; --j) {
    Real c = a + Real(j, bits);
    Complex w = numerics::exp2pii(-(tau * c + b));
    Complex li1 = -numerics::log(Complex(Real(1L, bits)) - w);
    sum += li1 * (-(P * c / y)) + numerics::li2(w) / y4;
    if (abs(w) * (numerics::abs(c) + 1L) < eps) break;
  }
  // Every term carries the factor -2 pi i.
  return times_i(sum) * (P * -2L);
}

}  // namespace

RValue r_lattice(const Complex& tau, const Real& a_in, const Real& b_in, int M) {
  if (M < 1) throw std::invalid_argument("r_lattice: M must be positive");
  const long double tr = tau.re.to_double(), ty = tau.im.to_double();
  Real ar = a_in - numerics::floor(a_in), br = b_in - numerics::floor(b_in);
  if (ar.is_zero() && br.is_zero()) throw std::domain_error("r_lattice: x = 0");
  const long double a = static_cast<long double>(ar.to_double()), b = static_cast<long double>(br.to_double());
  const cld t(tr, ty);
  const long double twopi = 2 * std::acos(-1.0L);
  Compensated re, im;
  for (int m = 0; m <= M; ++m) {
    for (int n = -M; n <= M; ++n) {
      if (m == 0 && n <= 0) continue;
      // Terms at (m, n) and (-m, -n) are equal.
      long double phase = std::fmod(n * a - m * b, 1.0L);
      // sin vanishes exactly at multiples of 1/2; don't leave rounding noise.
      if (2 * phase == std::trunc(2 * phase)) continue;
      long double s = std::sin(twopi * phase);
      cld d = static_cast<long double>(m) * t + static_cast<long double>(n);
      long double nd = std::norm(d);
      cld term = s * std::conj(d) / (nd * nd);
      re.add(2 * term.real());
      im.add(2 * term.imag());
    }
  }
  const long double pi_ld = std::acos(-1.0L);
  const long double scale = ty * ty / pi_ld;
  // R = -(i/pi) y^2 S.
  const unsigned bits = 64;
  Complex value(Real(static_cast<double>(scale * im.value()), bits), Real(static_cast<double>(-scale * re.value()), bits));

  long double c1 = std::fabs(tr) <= 1 ? ty : std::hypot(std::fabs(tr) - 1, ty);
  long double s = std::clamp(-tr / std::norm(t), -1.0L, 1.0L);
  long double c2 = std::abs(s * t + 1.0L);
  long double c = std::min(c1, c2);
  long double bound = 8 * ty * ty / (pi_ld * c * c * c * M);
  return {value, Method::lattice, Real(static_cast<double>(bound), bits)};
}

RValue r_fast(const Complex& tau_in, const Real& a_in, const Real& b_in) {
  const unsigned bits = std::min({tau_in.precision(), a_in.precision(), b_in.precision()});
  const unsigned work = bits + 32;
  Complex tau = tau_in.with_precision(work);
  Real a = reduce_half(a_in.with_precision(work)), b = reduce_half(b_in.with_precision(work));
  if (a.is_zero() && b.is_zero()) throw std::domain_error("r_fast: x = 0");
  Real eps = numerics::ldexp_one(-static_cast<long>(work), work);

  Complex q = numerics::exp2pii(tau);
  Complex z = numerics::exp2pii(tau * a + Complex(b));
  Real dsum = bloch_wigner_sum(q, z, eps);

  Real y = tau.im, P = pi(work);
  Real afrac = a - numerics::floor(a);
  Complex K = Complex(Real::zero(work), P * P * P * 4L / 3L * bernoulli3(afrac));
  K += poisson_half(tau, a, b, eps) - poisson_half(tau, -a, -b, eps);
  Complex poisson = K * (-(y * y) / P);

  Real err = numerics::abs(poisson.re - dsum) + numerics::ldexp_one(-static_cast<long>(bits) + 8, bits);
  return {Complex(dsum, poisson.im).with_precision(bits), Method::accelerated, err.with_precision(bits)};
}

DivisorValue r_divisor_value(const divisors::Divisor& d, unsigned bits, const DivisorOptions& opts) {
  auto lat = uniformization::lattice_of(d.curve(), bits);
  Complex sum = Complex::zero(bits);
  Real err = Real::zero(bits);
  for (auto& [key, t] : d.terms()) {
    auto log = uniformization::elliptic_log(t.point, *lat, opts.embedding);
    if (log.a.is_zero() && log.b.is_zero()) continue;
    RValue r = r_fast(lat->tau, log.a, log.b);
    sum += r.value * t.coeff;
    err += r.error_estimate * std::abs(t.coeff);
  }
  Real factor(opts.scale, bits);
  if (opts.form == Form::omega) factor *= lat->omega_real;
  sum *= factor;
  err *= numerics::abs(factor);
  if (opts.require_real) {
    Real tol = err + numerics::max(numerics::abs(sum.re), Real(1L, bits)) *
                         numerics::ldexp_one(-static_cast<long>(bits) / 2, bits);
    if (numerics::abs(sum.im) > tol)
      throw ImaginaryResidual("r_divisor: imaginary part " + sum.im.to_string(6) + " exceeds tolerance", sum.im);
  }
  return {sum, err};
}

Real r_divisor(const divisors::Divisor& d, unsigned bits, const DivisorOptions& opts) {
  return r_divisor_value(d, bits, opts).value.re;
}

Real r_point(const curves::Point& p, unsigned bits, Form form) {
  DivisorOptions opts;
  opts.form = form;
  return r_divisor(divisors::make_divisor(p.curve(), {{1, p}}), bits, opts);
}

Real check_distribution(const curves::Isogeny& iso, const curves::Point& x, unsigned bits) {
  DivisorOptions opts;
  opts.form = Form::omega;
  opts.require_real = false;
  Complex lhs = r_divisor_value(divisors::make_divisor(iso.target, {{1, x}}), bits, opts).value;

  divisors::FormalSum fiber(iso.source);
  for (auto& p : curves::preimages(iso, x)) fiber.add(p, 1);
  Complex rhs = r_divisor_value(divisors::normalize(fiber), bits, opts).value;
  const auto& f = iso.source->field();
  unsigned idx = f->cyclotomic_order() ? f->principal_embedding() : 0;
  rhs = rhs * iso.lambda.embed(idx, bits);
  return abs(lhs - rhs);
}

}  // namespace boyd14::edilog
