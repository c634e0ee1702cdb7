#include <random>

#include "boyd14/curves/isogeny.hpp"
#include "boyd14/divisors/json.hpp"
#include "doctest.h"

using namespace boyd14::divisors;
using namespace boyd14::curves;
using boyd14::exact::Field;
using boyd14::exact::Scalar;

namespace {

Scalar q(long n) { return Scalar(n); }

struct Z36 {
  CurvePtr e = Curve::family_g(q(1))->over(Field::cyclotomic(7, "g"));
  Subgroup z{{{"A", e->named("A")}, {"Q", e->named("Q")}, {"Q'", e->named("Q'")}, {"Q''", e->named("Q''")}}};
};

const Z36& z36() {
  static const Z36 z;
  return z;
}

FormalSum random_sum(std::mt19937_64& rng) {
  const auto& g = z36();
  std::uniform_int_distribution<size_t> pick(0, g.z.size() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  FormalSum s(g.e);
  for (int i = 0; i < 3; ++i) s.add(g.z.elements()[pick(rng)].point, coeff(rng));
  return s;
}

FormalSum as_sum(const Divisor& d) {
  FormalSum s(d.curve());
  for (auto& [k, t] : d.terms()) s.add(t.point, t.coeff);
  return s;
}

}  // namespace

TEST_CASE("normalize") {
  CurvePtr c = Curve::family_g(q(7));
  Point P = c->named("P"), Q = c->named("Q");
  CHECK(make_divisor(c, {{1, P}, {1, -P}}).is_zero());
  CHECK(make_divisor(c, {{5, c->zero()}}).is_zero());
  CHECK(make_divisor(c, {{2, Q}}).is_zero());
  CHECK(make_divisor(c, {{3, Q}}) == make_divisor(c, {{1, Q}}));
  CHECK(make_divisor(c, {{1, -P}}) == make_divisor(c, {{-1, P}}));
  CHECK(make_divisor(c, {{1, -P}}).coeff(P) == -1);

  // 3(2[q2] + 2[q3] + 2[q4] - 3[p]) with q_i the halves of p other than 2p.
  const auto& g = z36();
  Point p = g.e->named("P");
  auto halves = preimages(multiplication_by_2(g.e), p);
  REQUIRE(halves.size() == 4);
  FormalSum raw(g.e);
  for (auto& h : halves)
    if (h != p.times(2)) raw.add(h, 6);
  raw.add(p, -9);
  Divisor d = normalize(raw);
  CHECK(d.terms().size() == 4);
  CHECK(d.coeff(p) == -9);
  for (auto& h : halves)
    if (h != p.times(2)) CHECK(d.coeff(h) == 6);
}

TEST_CASE("convolution and antipode") {
  CurvePtr c = Curve::family_g(q(7));
  Point P = c->named("P"), Q = c->named("Q"), O = c->zero();
  FormalSum fa(c, {{3, P}, {-3, O}});
  FormalSum fb(c, {{2, Q}, {-2, O}});
  CHECK(normalize(convolve(fa, antipode(fb))) == make_divisor(c, {{6, P + Q}, {-6, P}}));
  FormalSum unit(c, {{1, O}});
  CHECK(convolve(fa, unit) == fa);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    FormalSum a = random_sum(rng), b = random_sum(rng), e = random_sum(rng);
    CHECK(antipode(antipode(a)) == a);
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(convolve(a, b), e) == convolve(a, convolve(b, e)));
    Divisor n = normalize(a);
    CHECK(normalize(as_sum(n)) == n);
  }
}

TEST_CASE("beta of the coordinate functions") {
  auto [yg, zg] = coordinate_divisors(Family::g, q(7));
  CurvePtr c = yg.curve();
  CHECK(beta(yg, zg) == make_divisor(c, {{6, c->named("P+Q")}, {-6, c->named("P")}}));

  Scalar k = Scalar::generator(Field::rational_functions("k"));
  auto [yk, zk] = coordinate_divisors(Family::g, k);
  CHECK(beta(yk, zk) == make_divisor(yk.curve(), {{6, yk.curve()->named("P+Q")}, {-6, yk.curve()->named("P")}}));

  for (long kv : {-1L, 5L}) {
    auto [yn, zn] = coordinate_divisors(Family::n, q(kv));
    CurvePtr cn = yn.curve();
    Divisor expect = make_divisor(cn, {{-9, cn->named("P")}, {-9, cn->named("P+Q")}, {-9, cn->named("P-Q")}});
    CHECK(beta(yn, zn) == expect);
  }

  Point p = c->named("P");
  FormalSum sym(c, {{1, p}, {1, -p}, {-2, c->zero()}});
  CHECK(beta(sym, sym).is_zero());
  CHECK_THROWS_AS(beta(FormalSum(c, {{1, p}}), yg), DegreeError);
}

TEST_CASE("coordinate divisors are principal and match the functions") {
  auto [y, z] = coordinate_divisors(Family::g, q(7));
  CHECK(y.degree() == 0);
  CHECK(z.degree() == 0);
  CHECK(y.evaluate().is_zero());
  CHECK(z.evaluate().is_zero());
  // Zeros of y have plane coordinate y = 0; the finite pole P+Q has no image.
  CurvePtr c = y.curve();
  for (const char* name : {"P", "Q"}) CHECK(deuring_to_plane(c->named(name))->first.is_zero());
  for (const char* name : {"-P", "Q"}) CHECK(deuring_to_plane(c->named(name))->second.is_zero());
  CHECK(!deuring_to_plane(c->named("P+Q")).has_value());

  auto [yn, zn] = coordinate_divisors(Family::n, q(5));
  CurvePtr cn = yn.curve();
  CHECK(yn.evaluate().is_zero());
  CHECK(zn.evaluate().is_zero());
  for (const char* name : {"P", "P+Q", "P-Q"}) CHECK(deuring_to_plane(cn->named(name))->first.is_zero());
  Point nP = -cn->named("P");
  CHECK(deuring_to_plane(nP)->second.is_zero());
  CHECK(deuring_to_plane(nP + cn->named("Q"))->second.is_zero());
  CHECK(!deuring_to_plane(cn->named("Q")).has_value());
}

TEST_CASE("divisor json round trip and labels") {
  const auto& g = z36();
  Point a = g.e->named("A");
  Divisor d = make_divisor(g.e, {{-1, a}, {-1, a.times(4)}, {-1, a.times(7)}, {-3, a.times(3)}});
  auto j = to_json(d, &g.z);
  CHECK(divisor_from_json(j, g.e) == d);
  // 7A = -2A, so -[7A] shows as +[2A].
  CHECK(d.to_string(&g.z) == "[2A] - 3[3A] - [4A] - [A]");
  CurvePtr c = Curve::family_g(q(7));
  Subgroup pq({{"P", c->named("P")}, {"Q", c->named("Q")}});
  CHECK(make_divisor(c, {{6, c->named("P+Q")}, {-6, c->named("P")}}).to_string(&pq) == "-6[P] + 6[P+Q]");
}
