#include "boyd14/numerics/special.hpp"

#include <mutex>
#include <vector>

namespace boyd14::numerics {

namespace {

constexpr unsigned kGuardBits = 32;

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_cache{mpq_class(1)};

// Series sum_{n>=1} z^n / n^2, for |z| <= 1/2.
Complex li2_series(const Complex& z) {
  const unsigned bits = z.precision();
  Complex sum = Complex::zero(bits);
  Complex power = z;
  Real eps = ldexp_one(-static_cast<long>(bits), bits);
  for (long n = 1;; ++n) {
    Complex term = power / (n * n);
    sum += term;
    if (norm(term) <= sqr(eps) * norm(sum) || norm(power) == Real::zero(bits)) break;
    power *= z;
  }
  return sum;
}

// Li2(z) = sum_n B_n u^(n+1)/(n+1)!, u = -log(1-z); converges for |u| < 2 pi.
Complex li2_bernoulli(const Complex& z) {
  const unsigned bits = z.precision();
  Complex u = -log(1L - z);
  Complex u2 = u * u;
  Complex sum = u - u2 / 4L;
  Real eps = ldexp_one(-static_cast<long>(bits), bits);
  Complex power = u;  // u^(2k+1)
  mpz_class fact = 1;  // (2k+1)!
  for (unsigned k = 1;; ++k) {
    power *= u2;
    fact *= (2 * k) * (2 * k + 1);
    Complex term = power * Real(mpq_class(bernoulli(2 * k) / fact), bits);
    sum += term;
    if (norm(term) <= sqr(eps) * norm(sum)) break;
    if (k > 4 * bits) break;  // unreachable for |u| < 2 pi
  }
  return sum;
}

Complex li2_unit_disk(const Complex& z) {
  const unsigned bits = z.precision();
  Real half(0.5, bits);
  if (abs(z) <= half) return li2_series(z);
  Complex w = 1L - z;
  if (abs(w) < half) {
    Real zeta2 = sqr(pi(bits)) / 6L;
    return Complex(zeta2) - log(z) * log(w) - li2_series(w);
  }
  return li2_bernoulli(z);
}

}  // namespace

mpq_class bernoulli(unsigned n) {
  std::lock_guard lock(bernoulli_mutex);
  // Recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0.
  while (bernoulli_cache.size() <= n) {
    unsigned m = static_cast<unsigned>(bernoulli_cache.size());
    mpq_class s = 0;
    mpz_class binom = 1;
    for (unsigned k = 0; k < m; ++k) {
      s += binom * bernoulli_cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -s / mpq_class(m + 1);
    b.canonicalize();
    bernoulli_cache.push_back(b);
  }
  return bernoulli_cache[n];
}

Complex li2(const Complex& z_in) {
  const unsigned bits = z_in.precision();
  const unsigned work = bits + kGuardBits;
  Complex z = z_in.with_precision(work);
  if (z.is_zero()) return Complex::zero(bits);
  Real one(1L, work);
  Complex result;
  if (abs(z) > one) {
    // Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2
    Real zeta2 = sqr(pi(work)) / 6L;
    Complex l = log(-z);
    result = -li2_unit_disk(1L / z) - Complex(zeta2) - l * l / 2L;
  } else if (z.im.is_zero() && z.re == one) {
    result = Complex(sqr(pi(work)) / 6L);
  } else {
    result = li2_unit_disk(z);
  }
  return result.with_precision(bits);
}

Real bloch_wigner(const Complex& z_in, bool* precision_loss) {
  const unsigned bits = z_in.precision();
  if (z_in.is_zero()) throw DomainError("bloch_wigner: z = 0");
  if (z_in.im.is_zero() && z_in.re == Real(1L, bits)) throw DomainError("bloch_wigner: z = 1");
  const unsigned work = bits + kGuardBits;
  Complex z = z_in.with_precision(work);
  if (z.im.is_zero()) {
    if (precision_loss) *precision_loss = false;
    return Real::zero(bits);
  }
  Real a = li2(z).im;
  Real b = arg(1L - z) * log(abs(z));
  Real d = a + b;
  if (precision_loss) {
    long lost = std::max(a.exponent(), b.exponent()) - d.exponent();
    *precision_loss = !d.is_zero() && lost > static_cast<long>(kGuardBits);
  }
  return d.with_precision(bits);
}

Real incomplete_gamma_upper(int s, const Real& x) {
  if (x.sign() <= 0) throw DomainError("incomplete_gamma_upper: x must be positive");
  switch (s) {
    case 0:
      return -eint(-x);
    case 1:
      return exp(-x);
    case 2:
      return (x + 1L) * exp(-x);
    case 3:
      return (sqr(x) + x * 2L + 2L) * exp(-x);
    default:
      break;
  }
  throw DomainError("incomplete_gamma_upper: s must be in {0,1,2,3}");
}

Real agm(const Real& a, const Real& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("agm: arguments must be positive");
  Real r = Real::zero(std::min(a.precision(), b.precision()));
  mpfr_agm(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

}  // namespace boyd14::numerics
