#include <random>

#include "boyd14/numerics/polyroots.hpp"
#include "boyd14/numerics/quadrature.hpp"
#include "boyd14/numerics/special.hpp"
#include "doctest.h"

using namespace boyd14::numerics;

namespace {

constexpr unsigned kBits = 200;  // about 60 digits

Real tol_digits(long d) { return pow(Real(10L, kBits), -d); }

Complex cplx(double re, double im, unsigned bits = kBits) { return {Real(re, bits), Real(im, bits)}; }

}  // namespace

TEST_CASE("bloch-wigner vanishes on the real line") {
  CHECK(bloch_wigner(cplx(0.5, 0)).is_zero());
  CHECK(bloch_wigner(cplx(-3.25, 0)).is_zero());
}

TEST_CASE("bloch-wigner is odd under conjugation") {
  Complex z = cplx(0.3, 0.4);
  CHECK(abs(bloch_wigner(conj(z)) + bloch_wigner(z)) < tol_digits(55));
}

TEST_CASE("bloch-wigner at i is Catalan's constant") {
  Real catalan = Real::zero(kBits);
  mpfr_const_catalan(catalan.get(), MPFR_RNDN);
  Real d = bloch_wigner(Complex::i(kBits));
  CHECK(abs(d - catalan) < tol_digits(55));
  // Independent check against a plain partial sum of sum i^n/n^2 (error ~ 1/N^2).
  Real partial = Real::zero(kBits);
  for (long k = 0; k < 20000; ++k) {
    Real term = Real(1L, kBits) / sqr(Real(2 * k + 1, kBits));
    partial += (k % 2 == 0) ? term : -term;
  }
  CHECK(abs(d - partial) < Real(1e-8, kBits));
}

TEST_CASE("bloch-wigner domain errors") {
  CHECK_THROWS_AS(bloch_wigner(cplx(0, 0)), DomainError);
  CHECK_THROWS_AS(bloch_wigner(cplx(1, 0)), DomainError);
}

TEST_CASE("bloch-wigner functional equations on random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Real worst = Real::zero(kBits);
  for (int i = 0; i < 1000; ++i) {
    Complex z = cplx(u(rng), u(rng));
    Real d = bloch_wigner(z);
    Real inv = bloch_wigner(1L / z);
    Real refl = bloch_wigner(1L - z);
    worst = max(worst, max(abs(d + inv), abs(d + refl)));
  }
  CHECK(worst < tol_digits(55));
}

TEST_CASE("bloch-wigner is pure") {
  Complex z = cplx(0.7, -1.9);
  CHECK(bloch_wigner(z) == bloch_wigner(z));
}

TEST_CASE("dilogarithm special values") {
  Real p = pi(kBits);
  Real l2 = log(Real(2L, kBits));
  Complex half = li2(cplx(0.5, 0));
  CHECK(abs(half.re - (sqr(p) / 12L - sqr(l2) / 2L)) < tol_digits(55));
  CHECK(abs(li2(cplx(-1, 0)).re + sqr(p) / 12L) < tol_digits(55));
  Complex one = li2(cplx(1, 0));
  CHECK(abs(one.re - sqr(p) / 6L) < tol_digits(55));
  // Bernoulli branch against Euler's reflection formula.
  Complex z = cplx(0.35, 0.8);
  Complex lhs = li2(z) + li2(1L - z);
  Complex rhs = Complex(sqr(p) / 6L) - log(z) * log(1L - z);
  CHECK(abs(lhs - rhs) < tol_digits(55));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("incomplete gamma closed forms") {
  Real x(2.25, kBits);
  CHECK(abs(incomplete_gamma_upper(1, x) - exp(-x)) < tol_digits(55));
  CHECK(abs(incomplete_gamma_upper(2, x) - (x + 1L) * exp(-x)) < tol_digits(55));
  CHECK_THROWS_AS(incomplete_gamma_upper(4, x), DomainError);
  CHECK_THROWS_AS(incomplete_gamma_upper(2, -x), DomainError);
}

TEST_CASE("incomplete gamma against quadrature") {
  Real x(3.7, kBits);
  QuadratureOptions opts;
  opts.bits = kBits;
  opts.order = 40;
  for (int s : {0, 2, 3}) {
    auto f = [s](const Real& t) { return pow(t, static_cast<long>(s - 1)) * exp(-t); };
    Estimate q = integrate(f, x, x + 160L, tol_digits(50), opts);
    CHECK(abs(q.value - incomplete_gamma_upper(s, x)) < tol_digits(45));
  }
}

TEST_CASE("agm") {
  Real x(1.75, kBits);
  CHECK(agm(x, x) == x);
  Real a(3L, kBits), b(0.125, kBits);
  CHECK(abs(agm(a, b) - agm((a + b) / 2L, sqrt(a * b))) < tol_digits(55));
  // Oracle: plain iteration until self-converged.
  Real p(1L, kBits), q = sqrt(Real(2L, kBits));
  for (int i = 0; i < 40; ++i) {
    Real np = (p + q) / 2L;
    q = sqrt(p * q);
    p = np;
  }
  CHECK(abs(p - q) < tol_digits(58));
  Real g = agm(Real(1L, kBits), sqrt(Real(2L, kBits)));
  CHECK(abs(g - p) < tol_digits(55));
  CHECK(g.to_string(21).rfind("1.19814023473559220744", 0) == 0);
}

TEST_CASE("polynomial roots") {
  // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
  std::vector<Real> c{Real(-6L, kBits), Real(11L, kBits), Real(-6L, kBits), Real(1L, kBits)};
  auto r = polyroots(c, kBits);
  REQUIRE(r.size() == 3);
  Real sum = Real::zero(kBits);
  for (auto& z : r) {
    CHECK(abs(z.im) < tol_digits(50));
    Real n = floor(z.re + Real(0.5, kBits));
    CHECK(abs(z.re - n) < tol_digits(50));
    sum += z.re;
  }
  CHECK(abs(sum - 6L) < tol_digits(50));
  // Leading zero coefficient is dropped; z^2 + 1.
  std::vector<Real> d{Real(1L, kBits), Real(0L, kBits), Real(1L, kBits), Real(0L, kBits)};
  auto s = polyroots(d, kBits);
  REQUIRE(s.size() == 2);
  for (auto& z : s) CHECK(abs(abs(z.im) - 1L) < tol_digits(50));
}

TEST_CASE("gauss-legendre") {
  QuadratureOptions opts;
  opts.bits = kBits;
  Estimate e = integrate([](const Real& t) { return sin(t); }, Real(0L, kBits), pi(kBits), tol_digits(50), opts);
  CHECK(abs(e.value - 2L) < tol_digits(48));
  auto rule = gauss_legendre(5, kBits);
  Real s = Real::zero(kBits);
  for (size_t i = 0; i < 5; ++i) s += rule->weights[i] * pow(rule->nodes[i], 8L);
  CHECK(abs(s - Real(2L, kBits) / 9L) < tol_digits(55));
}
