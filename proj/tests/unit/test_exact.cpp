#include <random>

#include "boyd14/exact/fpoly.hpp"
#include "boyd14/exact/linalg.hpp"
#include "doctest.h"

using namespace boyd14::exact;
using boyd14::numerics::Complex;
using boyd14::numerics::Real;

namespace {

constexpr unsigned kBits = 200;

FieldPtr q7() { return Field::cyclotomic(7, "g"); }

Scalar random_element(std::mt19937_64& rng, const FieldPtr& f) {
  std::uniform_int_distribution<long> u(-9, 9);
  std::vector<mpq_class> c;
  for (unsigned i = 0; i < f->degree(); ++i) c.emplace_back(u(rng), 1 + std::abs(u(rng)));
  return Scalar(f, QPoly(c));
}

Real tol(long digits) { return pow(Real(10L, kBits), -digits); }

}  // namespace

TEST_CASE("defining relation and sqrt(-7)") {
  const auto& c = cyclotomic7_constants();
  CHECK(pow(c.gamma, 7).is_one());
  CHECK(c.gamma * pow(c.gamma, 6) == Scalar(1L));
  CHECK(c.sqrt_m7 * c.sqrt_m7 == Scalar(-7L));
  CHECK(c.sqrt_m7.to_string() == "1+2*g+2*g^2+2*g^4");
  Scalar s = parse_scalar("1+2*g+2*g^2+2*g^4", q7());
  CHECK(s * s == Scalar(-7L));
}

TEST_CASE("xi is a root of t^3 - 2t^2 - t + 1") {
  Scalar xi = cyclotomic7_constants().xi;
  CHECK((pow(xi, 3) - Scalar(2L) * pow(xi, 2) - xi + Scalar(1L)).is_zero());
}

TEST_CASE("cancellation in Q(k)") {
  FieldPtr qk = Field::rational_functions("k");
  Scalar r = parse_scalar("(k^2-4)/(k-2)", qk);
  CHECK(r == parse_scalar("k+2", qk));
  CHECK(r.to_string() == "2+k");
  CHECK(parse_scalar("1/2*k", qk).to_string() == "1/2*k");
  CHECK(parse_scalar("(1-k)/(2k+2)", qk).to_string() == "(1/2-1/2*k)/(1+k)");
  CHECK(r.at(mpq_class(3)) == Scalar(5L));
  CHECK_THROWS_AS(r / Scalar(qk, mpq_class(0)), DivisionByZero);
}

TEST_CASE("descriptor mismatch") {
  Scalar a = Scalar::generator(q7());
  Scalar b = Scalar::generator(Field::rational_functions("k"));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(Scalar::generator(q7()) / Scalar(q7(), mpq_class(0)), DivisionByZero);
}

TEST_CASE("trace and galois action") {
  Scalar g = cyclotomic7_constants().gamma;
  CHECK(g.trace() == Scalar(-1L));
  // Oracle: direct sum of the six conjugates.
  Scalar direct(q7(), mpq_class(0));
  for (long e = 1; e < 7; ++e) direct += g.galois(e);
  CHECK(direct == Scalar(-1L));
  CHECK(Scalar(q7(), mpq_class(5)).trace() == Scalar(30L));
  CHECK_THROWS_AS(g.galois(14), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Scalar a = random_element(rng, q7());
    CHECK(a.galois(4).galois(2) == a);
    CHECK(a.galois(3).galois(5) == a);
    Scalar t = a.trace();
    CHECK(t.is_rational());
    Scalar sum(q7(), mpq_class(0));
    for (long e = 1; e < 7; ++e) sum += a.galois(e);
    CHECK(sum == t);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_element(rng, q7()), b = random_element(rng, q7()), c = random_element(rng, q7());
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("embeddings") {
  FieldPtr f = q7();
  CHECK(f->principal_embedding() == 3);
  const auto& c = cyclotomic7_constants();
  Real two_pi = boyd14::numerics::pi(kBits) * 2L;
  Complex g = c.gamma.embed(3, kBits);
  CHECK(abs(g.re - cos(two_pi / 7L)) < tol(50));
  CHECK(abs(g.im - sin(two_pi / 7L)) < tol(50));

  // Oracle: bisection for the largest root of t^3 - 2t^2 - t + 1.
  Real lo(2L, kBits), hi(3L, kBits);
  auto p = [](const Real& t) { return t * t * t - t * t * 2L - t + 1L; };
  for (int i = 0; i < 200; ++i) {
    Real mid = (lo + hi) / 2L;
    (p(mid).sign() < 0 ? lo : hi) = mid;
  }
  Complex xi = c.xi.embed(3, kBits);
  CHECK(abs(xi.im) < tol(50));
  CHECK(abs(xi.re - lo) < tol(50));
  CHECK(xi.re.to_string(9).rfind("2.24697960", 0) == 0);

  Complex s = c.sqrt_m7.embed(3, kBits);
  CHECK(abs(s * s + 7L) < tol(50));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    Scalar a = random_element(rng, f), b = random_element(rng, f);
    for (unsigned j = 0; j < 6; ++j) {
      Complex lhs = (a * b).embed(j, kBits);
      Complex rhs = a.embed(j, kBits) * b.embed(j, kBits);
      CHECK(abs(lhs - rhs) < tol(50));
    }
  }
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    Scalar a = random_element(rng, q7());
    CHECK(parse_scalar(a.to_string(), q7()) == a);
  }
  CHECK(parse_field("Q(zeta7)") == q7());
  CHECK(parse_field("Q(k)") == Field::rational_functions("k"));
  CHECK(parse_field("Q") == Field::rationals());
  CHECK(parse_scalar("-3/8", Field::rationals()) == Scalar(mpq_class(-3, 8)));
  CHECK_THROWS_AS(parse_scalar("2*x", Field::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("(1+g", q7()), std::invalid_argument);
}

TEST_CASE("roots in Q") {
  // (X - 1/3)^2 (X + 5) (X^2 + 1)
  FieldPtr q = Field::rationals();
  FPoly x = FPoly::x(q);
  FPoly f = pow(x - FPoly(Scalar(mpq_class(1, 3))), 2) * (x + FPoly(Scalar(5L))) * (x * x + FPoly(Scalar(1L)));
  FieldRoots r = roots_in_field(f);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.cofactor.degree() == 2);
  for (auto& root : r.roots) {
    if (root.value == Scalar(mpq_class(1, 3))) CHECK(root.multiplicity == 2);
    else CHECK((root.value == Scalar(-5L) && root.multiplicity == 1));
  }
}

TEST_CASE("roots in Q(zeta7)") {
  const auto& c = cyclotomic7_constants();
  FieldPtr f = q7();
  FPoly x = FPoly::x(f);
  // t^3 - 2t^2 - t + 1 splits: xi and its conjugates.
  FPoly m(f, {Scalar(1L), Scalar(-1L), Scalar(-2L), Scalar(1L)});
  FieldRoots r = roots_in_field(m);
  CHECK(r.roots.size() == 3);
  CHECK(r.cofactor.degree() == 0);
  bool has_xi = false;
  for (auto& root : r.roots) has_xi = has_xi || root.value == c.xi;
  CHECK(has_xi);
  // 4X^2 - 3X + 1 has roots (3 +- sqrt(-7))/8.
  FieldRoots t = roots_in_field(FPoly(f, {Scalar(1L), Scalar(-3L), Scalar(4L)}));
  REQUIRE(t.roots.size() == 2);
  Scalar plus = (Scalar(3L) + c.sqrt_m7) / Scalar(8L);
  CHECK((t.roots[0].value == plus || t.roots[1].value == plus));
  // X^2 - 2 has no root here.
  FieldRoots none = roots_in_field(FPoly(f, {Scalar(-2L), Scalar(0L), Scalar(1L)}));
  CHECK(none.roots.empty());
  CHECK(none.cofactor.degree() == 2);
}

TEST_CASE("rational functions over a field") {
  FieldPtr q = Field::rationals();
  FRat x(FPoly::x(q));
  FRat r = (x * x - FRat(Scalar(1L))) / (x - FRat(Scalar(1L)));
  CHECK(r.den().degree() == 0);
  CHECK(r.eval(Scalar(4L)) == Scalar(5L));
}

TEST_CASE("exact linear solve") {
  FieldPtr qa = Field::rational_functions("a");
  Scalar a = Scalar::generator(qa);
  Matrix m{{Scalar(1L), Scalar(1L)}, {Scalar(1L), Scalar(-1L)}};
  auto x = solve_linear(m, {Scalar(3L) * a, a});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(2L) * a);
  CHECK((*x)[1] == a);
  CHECK(!solve_linear({{Scalar(1L)}, {Scalar(1L)}}, {Scalar(1L), Scalar(2L)}).has_value());
  CHECK(rank({{Scalar(1L), Scalar(2L)}, {Scalar(2L), Scalar(4L)}}) == 1);
}
