#include <random>

#include "boyd14/edilog/rfunction.hpp"
#include "doctest.h"

using namespace boyd14;
using namespace boyd14::edilog;
using curves::Curve;
using curves::CurvePtr;
using divisors::make_divisor;
using exact::Field;
using exact::FieldPtr;
using exact::Scalar;

namespace {

constexpr unsigned kBits = 192;

Real tiny(long e) { return numerics::ldexp_one(e, kBits); }

Complex tau_of(double re, double im) { return {Real(re, kBits), Real(im, kBits)}; }

}  // namespace

TEST_CASE("lattice sum basics") {
  Complex tau = tau_of(0, 1);
  RValue t2 = r_lattice(tau, Real(0.0, kBits), Real(0.5, kBits), 50);
  CHECK(t2.value.is_zero());
  CHECK(numerics::abs(r_fast(tau, Real(0.0, kBits), Real(0.5, kBits)).value.re) < tiny(-170));
  CHECK(numerics::abs(r_fast(tau, Real(0.5, kBits), Real(0.5, kBits)).value.re) < tiny(-170));

  RValue lat = r_lattice(tau, Real(0.0, kBits), Real(0.25, kBits), 400);
  RValue fast = r_fast(tau, Real(0.0, kBits), Real(0.25, kBits));
  CHECK(abs(lat.value - fast.value) < lat.error_estimate);
  CHECK_THROWS(r_lattice(tau, Real(1.0, kBits), Real(0.0, kBits), 10));
  CHECK_THROWS(r_fast(tau, Real(0.0, kBits), Real(2.0, kBits)));
}

TEST_CASE("oddness and periodicity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 8; ++i) {
    Complex tau = tau_of(i % 2 ? 0.5 : 0.0, 0.3 + u(rng));
    double a = u(rng), b = u(rng);
    Complex plus = r_fast(tau, Real(a, kBits), Real(b, kBits)).value;
    Complex minus = r_fast(tau, Real(-a, kBits), Real(-b, kBits)).value;
    Complex shifted = r_fast(tau, Real(a, kBits) + 1L, Real(b, kBits) - 2L).value;
    CHECK(abs(plus + minus) < tiny(-160));
    CHECK(abs(plus - shifted) < tiny(-150));
    Real lp = r_lattice(tau, Real(a, kBits), Real(b, kBits), 30).value.re;
    Real lm = r_lattice(tau, Real(-a, kBits), Real(-b, kBits), 30).value.re;
    CHECK(numerics::abs(lp + lm) < Real(1e-15));
  }
}

TEST_CASE("accelerated series against the lattice sum on a grid") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int cases = 0;
  while (cases < 20) {
    Complex tau = tau_of(cases % 2 ? 0.5 : 0.0, 0.4 + 1.2 * u(rng));
    double a = u(rng), b = u(rng);
    RValue fast = r_fast(tau, Real(a, kBits), Real(b, kBits));
    RValue lat = r_lattice(tau, Real(a, kBits), Real(b, kBits), 400);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(abs(fast.value - lat.value) < lat.error_estimate);
    // The two internal evaluations of the real part agree far below that.
    CHECK(fast.error_estimate < tiny(-170));
    ++cases;
  }
}

TEST_CASE("relations between values on curves") {
  CurvePtr g1 = Curve::family_g(Scalar(1L));
  Real v = r_divisor(make_divisor(g1, {{2, g1->named("P+Q")}, {-5, g1->named("P")}}), kBits);
  CHECK(numerics::abs(v) < Real(1e-25));
  CHECK(r_point(g1->named("P"), kBits) > Real(0.15, kBits));

  CurvePtr g2 = Curve::family_g(Scalar(-2L));
  CHECK(numerics::abs(r_divisor(make_divisor(g2, {{16, g2->named("P+Q")}, {11, g2->named("P")}}), kBits)) <
        Real(1e-25));

  // 24A1: y^2 = x^3 - x^2 - 4x + 4, p of order 4, r of order 2.
  CurvePtr e24 = Curve::weierstrass(Scalar(0L), Scalar(-1L), Scalar(0L), Scalar(-4L), Scalar(4L));
  curves::Point p = e24->point(Scalar(0L), Scalar(2L)), rr = e24->point(Scalar(-2L), Scalar(0L));
  CHECK(numerics::abs(r_divisor(make_divisor(e24, {{3, p + rr}, {-5, p}}), kBits)) < Real(1e-25));
  CHECK(numerics::abs(r_point(p.times(2), kBits)) < tiny(-150));

  // Values vanish at 2-torsion and the form scaling is linear.
  CurvePtr g8 = Curve::family_g(Scalar(-8L));
  CHECK(numerics::abs(r_point(g8->named("Q"), kBits)) < tiny(-150));
  DivisorOptions o3;
  o3.scale = 3;
  divisors::Divisor dp = make_divisor(g8, {{1, g8->named("P")}});
  CHECK(numerics::abs(r_divisor(dp, kBits, o3) - r_divisor(dp, kBits) * 3L) < tiny(-170));
  DivisorOptions om;
  om.form = Form::omega;
  CHECK(numerics::abs(r_divisor(dp, kBits, om) - r_divisor(dp, kBits) * uniformization::lattice_of(g8, kBits)->omega_real) <
        tiny(-170));
}

TEST_CASE("chains between E_g(1), E_g(-8) and E_n(-1) in du-normalization") {
  CurvePtr g1 = Curve::family_g(Scalar(1L)), g8 = Curve::family_g(Scalar(-8L));
  Real lhs = r_point(g8->named("P"), kBits);
  Real rhs = r_divisor(make_divisor(g1, {{1, g1->named("P")}, {1, g1->named("P+Q")}}), kBits) * 2L;
  CHECK(numerics::abs(lhs - rhs) < Real(1e-30));
  Real back = r_divisor(make_divisor(g8, {{1, g8->named("P")}, {1, g8->named("P+Q")}}), kBits);
  CHECK(numerics::abs(r_point(g1->named("P"), kBits) + back) < Real(1e-30));

  FieldPtr z3 = Field::cyclotomic(3, "g");
  CurvePtr n1 = Curve::family_n(Scalar(z3, mpq_class(-1)));
  Real sum = r_divisor(make_divisor(n1, {{1, n1->named("P")}, {1, n1->named("P+Q")}, {1, n1->named("P-Q")}}), kBits);
  CurvePtr d11 = Curve::deuring(Scalar(-1L), Scalar(1L));
  CHECK(numerics::abs(sum - r_point(d11->point(Scalar(0L), Scalar(0L)), kBits)) < Real(1e-30));
}

TEST_CASE("distribution relation for isogenies") {
  FieldPtr z3 = Field::cyclotomic(3, "g");
  auto rho = curves::rho3_n(Scalar(z3, mpq_class(-1)));
  CHECK(check_distribution(rho, rho.target->point(Scalar(z3, mpq_class(0)), Scalar(z3, mpq_class(0))), kBits) < Real(1e-20));

  auto rho1 = curves::rho2_g(Scalar(1L));
  CHECK(check_distribution(rho1, rho1.target->named("P"), kBits) < Real(1e-20));
  auto rho2 = curves::rho2_g(Scalar(-8L));
  CHECK(check_distribution(rho2, rho2.target->named("P"), kBits) < Real(1e-20));

  auto rho3 = curves::rho3_g1_to_g7(Field::cyclotomic(7, "g"));
  CHECK(check_distribution(rho3, rho3.target->named("P"), kBits) < Real(1e-20));
  CHECK(check_distribution(rho3, rho3.target->named("P+Q"), kBits) < Real(1e-20));

  CurvePtr g1z = Curve::family_g(Scalar(1L))->over(Field::cyclotomic(7, "g"));
  auto mul2 = curves::multiplication_by_2(g1z);
  CHECK(check_distribution(mul2, g1z->named("P"), kBits) < Real(1e-20));
  CHECK(check_distribution(mul2, g1z->named("A"), kBits) < Real(1e-20));

  auto over_q = curves::multiplication_by_2(Curve::family_g(Scalar(1L)));
  CHECK_THROWS_AS(check_distribution(over_q, over_q.target->named("P"), kBits), curves::FiberNotRational);
}
