#include "boyd14/numerics/quadrature.hpp"
#include "boyd14/uniformization/lattice.hpp"
#include "doctest.h"

using namespace boyd14;
using namespace boyd14::uniformization;
using curves::Curve;
using curves::CurvePtr;
using curves::Point;
using exact::Field;
using exact::Scalar;

namespace {

constexpr unsigned kBits = 192;

Real R(long n) { return Real(n, kBits); }

// Distance from x to the nearest integer.
Real frac_dist(const Real& x) {
  Real f = x - numerics::floor(x + Real(0.5, x.precision()));
  return numerics::abs(f);
}

// Real period by quadrature: integral of dx / sqrt(x^3 + A x + B) over
// [e1, inf), e1 the largest real root found by bisection.
Real quadrature_period(long A, long B) {
  auto f = [&](const Real& x) { return x * x * x + x * A + R(B); };
  Real lo = R(-1000), hi = R(1000);
  for (int i = 0; i < 400; ++i) {
    Real mid = (lo + hi) / 2L;
    (f(mid).sign() > 0 ? hi : lo) = mid;
  }
  // Largest root: rescan from the right.
  Real e1 = lo;
  for (long s = 1000; s > -1000; --s)
    if (f(R(s)).sign() <= 0) {
      Real a = R(s), b = R(s + 1);
      for (int i = 0; i < 400; ++i) {
        Real mid = (a + b) / 2L;
        (f(mid).sign() > 0 ? b : a) = mid;
      }
      e1 = a;
      break;
    }
  // x = e1 + t^2, t = s / (1 - s); f(x) = (x - e1) g(x).
  auto integrand = [&](const Real& s) {
    Real one = R(1);
    if (s >= one) return R(1) * 2L / (one * one);
    Real t = s / (one - s);
    Real x = e1 + t * t;
    Real g = x * x + e1 * x + e1 * e1 + R(A);
    return R(2) / numerics::sqrt(g) / ((one - s) * (one - s));
  };
  Real tol = numerics::ldexp_one(-120, kBits);
  return numerics::integrate(integrand, R(0), R(1), tol).value;
}

Point short_point(const CurvePtr& c, long x, long y) { return c->point(Scalar(x), Scalar(y)); }

void check_log_add(const Point& p, const Point& q, const RealLattice& lat) {
  EllipticLog lp = elliptic_log(p, lat), lq = elliptic_log(q, lat), ls = elliptic_log(p + q, lat);
  Real eps = numerics::ldexp_one(-140, kBits);
  CHECK(frac_dist(lp.a + lq.a - ls.a) < eps);
  CHECK(frac_dist(lp.b + lq.b - ls.b) < eps);
}

}  // namespace

TEST_CASE("periods agree with quadrature") {
  for (auto [A, B] : {std::pair{17L, 0L}, {0L, 17L}, {-2L, 0L}, {-7L, 6L}, {-1L, 1L}}) {
    if (4 * A * A * A + 27 * B * B == 0) continue;
    CurvePtr c = Curve::short_weierstrass(Scalar(A), Scalar(B));
    auto lat = lattice_of(c, kBits);
    Real q = quadrature_period(A, B);
    CAPTURE(A);
    CAPTURE(B);
    CHECK(numerics::abs(lat->omega_real - q) < numerics::ldexp_one(-100, kBits));
  }
}

TEST_CASE("known lattices and component counts") {
  auto lat = lattice_of(Curve::deuring(Scalar(5L), Scalar(7L)), kBits);
  CHECK(numerics::abs(lat->omega_real - Real("1.98134195606688323", kBits)) < Real(1e-16));
  CHECK(numerics::abs(lat->tau.im - Real("0.66898661062711717", kBits)) < Real(1e-16));

  auto g1 = lattice_of(Curve::family_g(Scalar(1L)), kBits);
  CHECK(g1->components == 1);
  CHECK(g1->tau.re == Real(0.5, kBits));
  CHECK(numerics::abs(g1->omega_real - Real("5.94402586820064970", kBits)) < Real(1e-16));
  auto g8 = lattice_of(Curve::family_g(Scalar(-8L)), kBits);
  CHECK(g8->components == 2);
  CHECK(g8->tau.re.is_zero());
  CHECK(lattice_of(Curve::family_n(Scalar(5L)), kBits)->components == 2);
  CHECK(lattice_of(Curve::family_n(Scalar(1L)), kBits)->components == 1);

  // Same object over a cyclotomic field through its principal embedding.
  auto g1z = lattice_of(Curve::family_g(Scalar(1L))->over(Field::cyclotomic(7, "g")), kBits);
  CHECK(g1z->omega_real == g1->omega_real);
}

TEST_CASE("rescaling the model") {
  // (x, y) -> (4x, 8y): A -> 16 A, B -> 64 B, omega -> omega / 2.
  auto a = lattice_of(Curve::short_weierstrass(Scalar(-7L), Scalar(6L)), kBits);
  auto b = lattice_of(Curve::short_weierstrass(Scalar(-7L * 16), Scalar(6L * 64)), kBits);
  Real eps = numerics::ldexp_one(-150, kBits);
  CHECK(numerics::abs(a->omega_real - b->omega_real * 2L) < eps);
  CHECK(numerics::abs(a->tau.im - b->tau.im) < eps);
  CHECK(a->omega_real.sign() > 0);
}

TEST_CASE("weierstrass p satisfies its differential equation") {
  for (auto [A, B] : {std::pair{17L, 0L}, {0L, 17L}, {-7L, 6L}}) {
    auto lat = lattice_of(Curve::short_weierstrass(Scalar(A), Scalar(B)), kBits);
    Real w = lat->omega_real;
    Real w4 = w * w * w * w, w6 = w4 * w * w;
    for (double s : {0.1, 0.37, 0.71}) {
      Complex u = lat->tau * Real(s, kBits) + Complex(Real(0.29 - s / 3, kBits));
      WeierstrassValue v = weierstrass_p(u, lat->tau);
      // p'^2 = 4 p^3 + 4 A w^4 p + 4 B w^6 in u-coordinates.
      Complex rhs = v.p * v.p * v.p * 4L + v.p * (w4 * (4 * A)) + Complex(w6 * (4 * B));
      Complex lhs = v.dp * v.dp;
      CHECK(numerics::abs(lhs - rhs) / numerics::abs(rhs) < numerics::ldexp_one(-160, kBits));
    }
  }
  // p(u) - 1/u^2 -> 0 as u -> 0 (no constant term).
  Complex tau(Real(0.5, kBits), Real(0.8, kBits));
  Complex u(Real(1e-12, kBits), Real(3e-13, kBits));
  Complex diff = weierstrass_p(u, tau).p - Complex(Real(1L, kBits)) / (u * u);
  CHECK(numerics::abs(diff) < Real(1e-15));
}

TEST_CASE("elliptic logarithm") {
  CurvePtr c = Curve::family_g(Scalar(1L));
  auto lat = lattice_of(c, kBits);
  EllipticLog z = elliptic_log(c->zero(), *lat);
  CHECK(z.a.is_zero());
  CHECK(z.b.is_zero());

  // P has order 3: 3 log P is a lattice point.
  EllipticLog lp = elliptic_log(c->named("P"), *lat);
  Real eps = numerics::ldexp_one(-150, kBits);
  CHECK(frac_dist(lp.a * 3L) < eps);
  CHECK(frac_dist(lp.b * 3L) < eps);
  CHECK(!(frac_dist(lp.a) < eps && frac_dist(lp.b) < eps));
  EllipticLog lm = elliptic_log(-c->named("P"), *lat);
  CHECK(frac_dist(lp.a + lm.a) < eps);
  CHECK(frac_dist(lp.b + lm.b) < eps);

  // Order-9 point over Q(zeta7), through the principal embedding.
  CurvePtr cz = c->over(Field::cyclotomic(7, "g"));
  auto latz = lattice_of(cz, kBits);
  EllipticLog la = elliptic_log(cz->named("A"), *latz);
  CHECK(frac_dist(la.a * 9L) < eps);
  CHECK(frac_dist(la.b * 9L) < eps);
  check_log_add(cz->named("A"), cz->named("Q'"), *latz);

  // Infinite-order points, one and two real components.
  CurvePtr e17 = Curve::short_weierstrass(Scalar(0L), Scalar(17L));
  auto l17 = lattice_of(e17, kBits);
  check_log_add(short_point(e17, -2, 3), short_point(e17, 2, 5), *l17);
  check_log_add(short_point(e17, 4, 9), short_point(e17, 4, 9), *l17);
  CurvePtr e2 = Curve::short_weierstrass(Scalar(-2L), Scalar(0L));
  auto l2 = lattice_of(e2, kBits);
  check_log_add(short_point(e2, 2, 2), short_point(e2, -1, 1), *l2);
  check_log_add(short_point(e2, 0, 0), short_point(e2, 2, -2), *l2);
  // Real points on the egg lie on the line a = 1/2.
  CHECK(frac_dist(elliptic_log(short_point(e2, -1, 1), *l2).a - Real(0.5, kBits)) < eps);
  CHECK(elliptic_log(short_point(e2, 2, 2), *l2).a.is_zero());
}

TEST_CASE("Deninger constants") {
  using curves::Family;
  CHECK(deninger_constant(Family::n, 5) == 1);
  CHECK(deninger_constant(Family::n, -1) == -2);
  CHECK(deninger_constant(Family::g, -8) == -1);
  CHECK(deninger_constant(Family::g, 7) == 1);
  CHECK_THROWS(deninger_constant(Family::n, 2));
  CHECK_THROWS(deninger_constant(Family::g, 0));
}
