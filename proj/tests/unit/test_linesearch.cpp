#include <algorithm>
#include <random>
#include <set>

#include "boyd14/curves/isogeny.hpp"
#include "boyd14/edilog/rfunction.hpp"
#include "boyd14/exact/linalg.hpp"
#include "boyd14/linesearch/certificate.hpp"
#include "doctest.h"

using namespace boyd14;
using namespace boyd14::linesearch;
using curves::Curve;
using curves::CurvePtr;
using divisors::make_divisor;
using exact::Field;

namespace {

size_t index_of(const Subgroup& z, const std::string& label) {
  Point p = z.evaluate(label);
  const auto& el = z.elements();
  for (size_t i = 0; i < el.size(); ++i)
    if (el[i].point == p) return i;
  throw std::invalid_argument("not in Z: " + label);
}

Triple triple(const Subgroup& z, const std::string& a, const std::string& b, const std::string& c) {
  Triple t{{index_of(z, a), index_of(z, b), index_of(z, c)}};
  std::sort(t.idx.begin(), t.idx.end());
  return t;
}

Scalar slope(const Subgroup& z, const std::string& a, const std::string& b, const std::string& c) {
  return line_of(z, triple(z, a, b, c)).s;
}

bool has_pair(const std::vector<ParallelPair>& pairs, const Triple& a, const Triple& b) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const ParallelPair& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

const ParallelPair& find_pair(const std::vector<ParallelPair>& pairs, const Triple& a, const Triple& b) {
  for (auto& p : pairs)
    if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) return p;
  throw std::runtime_error("pair not found");
}

// The Z/6 subgroup generated by p = -P-Q on E_g(k).
Subgroup cyclic6(const CurvePtr& e) { return Subgroup({{"p", -(e->named("P") + e->named("Q"))}}); }

// Z/9 + E[2] on E_g(1) over Q(zeta7); Q'' is Q+Q' here.
struct Z36 {
  CurvePtr e = Curve::family_g(Scalar(1L))->over(Field::cyclotomic(7, "g"));
  Subgroup z{{{"A", e->named("A")}, {"Q", e->named("Q")}, {"Q'", e->named("Q'")}}};
  Point at(const std::string& s) const { return z.evaluate(s); }
};

const Z36& z36() {
  static const Z36 f;
  return f;
}

bool vanishes(const Divisor& d, unsigned bits = 100) {
  edilog::DivisorOptions o;
  o.require_real = false;
  return numerics::abs(edilog::r_divisor_value(d, bits, o).value) < numerics::Real(1e-20);
}

CertificatePtr as_cert(const Divisor& d) {
  auto c = std::make_shared<Certificate>(Certificate{Certificate::Kind::combination, d, {}, {}, {}, {}});
  return c;
}

}  // namespace

TEST_CASE("triples of a cyclic group of order 6") {
  auto e = Curve::family_g(Scalar(1L));
  Subgroup z = cyclic6(e);
  std::set<std::string> got;
  for (auto& t : triples(z)) got.insert(triple_label(z, t));
  CHECK(got == std::set<std::string>{"(p, p, 4p)", "(p, 2p, 3p)", "(2p, 2p, 2p)", "(2p, 5p, 5p)", "(3p, 4p, 5p)",
                                     "(4p, 4p, 4p)"});
  for (auto& t : triples(z)) {
    auto pts = triple_points(z, t);
    CHECK((pts[0] + pts[1] + pts[2]).is_zero());
  }
}

TEST_CASE("slopes over the Gamma1(6) family") {
  auto Qk = Field::rational_functions("k");
  Scalar k = Scalar::generator(Qk);
  Subgroup z = cyclic6(Curve::family_g(k));
  Scalar half = k / Scalar(2L), one(Qk, mpq_class(1));
  CHECK(slope(z, "p", "p", "4p") == -one - half);
  CHECK(slope(z, "p", "2p", "3p") == -half);
  CHECK(slope(z, "2p", "2p", "2p") == one - half);
  CHECK(slope(z, "2p", "5p", "5p") == one + half);
  CHECK(slope(z, "3p", "4p", "5p") == half);
  CHECK(slope(z, "4p", "4p", "4p") == half - one);

  std::set<mpq_class> ks;
  for (auto& c : slope_coincidences(z))
    if (c.k != -1 && c.k != 0 && c.k != 8) ks.insert(c.k);
  CHECK(ks == std::set<mpq_class>{-2, 1, 2});
}

TEST_CASE("Gamma1(6) relations at k = 1 and k = -2") {
  for (long kv : {1L, -2L}) {
    CAPTURE(kv);
    auto e = Curve::family_g(Scalar(kv));
    Subgroup z = cyclic6(e);
    auto pairs = parallel_pairs(z);
    REQUIRE(!pairs.empty());
    Point P = e->named("P"), PQ = e->named("P") + e->named("Q");
    Divisor target = kv == 1 ? make_divisor(e, {{2, PQ}, {-5, P}}) : make_divisor(e, {{16, PQ}, {11, P}});
    for (auto& pr : pairs) {
      auto c = relation_divisor(z, pr);
      CHECK(!c->divisor.is_zero());
      CHECK(vanishes(c->divisor));
      // Each relation is a multiple of the expected one.
      auto w = eliminate({c}, target);
      CHECK(w.size() == 1);
    }
  }
  auto e1 = Curve::family_g(Scalar(1L));
  Subgroup z1 = cyclic6(e1);
  auto pairs = parallel_pairs(z1);
  CHECK(pairs.size() == 2);
  CHECK(has_pair(pairs, triple(z1, "p", "2p", "3p"), triple(z1, "4p", "4p", "4p")));
  CHECK(has_pair(pairs, triple(z1, "2p", "2p", "2p"), triple(z1, "3p", "4p", "5p")));
}

TEST_CASE("three-torsion: tangent slopes and the Gamma(3) scan") {
  for (long kv : {2L, 5L, -3L}) {
    auto e = Curve::family_g(Scalar(kv));
    Subgroup z({{"P", e->named("P")}});
    auto model = curves::to_short_weierstrass(e);
    auto ts = triples(z);
    CHECK(ts.size() == 2);
    for (auto& t : ts) {
      CHECK(t.inflection());
      Scalar s = line_of(z, t).s;
      CHECK(s * s == model.to_short(triple_points(z, t)[0]).x() * Scalar(3L));
    }
  }

  // Pairs among the full 3-torsion of E_n(k) appear only on y^2 = x^3 + b.
  // For E_g(k) only <P> is rational, and then s_{P,P,P} = -s_{2P,2P,2P}
  // forces a horizontal tangent.
  // Chord triples such as (P, P+Q, P+2Q) add a tangent-chord pair at k = -3.
  auto q3 = Field::cyclotomic(3, "w");
  std::set<long> n_hits, n_all, g_hits;
  for (long kv = -12; kv <= 12; ++kv) {
    if (kv != 3) {
      auto e = Curve::family_n(Scalar(kv))->over(q3);
      Subgroup z({{"P", e->named("P")}, {"Q", e->named("Q")}});
      auto pairs = parallel_pairs(z);
      if (!pairs.empty()) n_all.insert(kv);
      for (auto& pr : pairs) {
        if (pr.first.inflection() && pr.second.inflection()) n_hits.insert(kv);
        if (kv == -3) CHECK(vanishes(relation_divisor(z, pr)->divisor));
      }
    }
    if (kv != -1 && kv != 0 && kv != 8) {
      auto e = Curve::family_g(Scalar(kv));
      if (!parallel_pairs(Subgroup({{"P", e->named("P")}})).empty()) g_hits.insert(kv);
    }
  }
  CHECK(n_hits == std::set<long>{-6, 0});
  CHECK(n_all == std::set<long>{-6, -3, 0});
  CHECK(g_hits == std::set<long>{2});
}

TEST_CASE("full three-torsion has more triples than the inflection ones") {
  auto e = Curve::family_n(Scalar(5L))->over(Field::cyclotomic(3, "w"));
  Subgroup z({{"P", e->named("P")}, {"Q", e->named("Q")}});
  CHECK(z.size() == 9);
  auto ts = triples(z);
  CHECK(ts.size() == 16);
  CHECK(std::count_if(ts.begin(), ts.end(), [](const Triple& t) { return t.inflection(); }) == 8);
  CHECK(std::count_if(ts.begin(), ts.end(), [](const Triple& t) { return !t.tangent(); }) == 8);
}

TEST_CASE("24A1: z-map and slopes") {
  auto e = Curve::weierstrass(Scalar(0L), Scalar(-1L), Scalar(0L), Scalar(-4L), Scalar(4L));
  Point p(e, Scalar(0L), Scalar(2L)), r(e, Scalar(-2L), Scalar(0L));
  Subgroup z({{"p", p}, {"r", r}});
  CHECK(z.size() == 8);
  CHECK(triples(z).size() == 9);

  auto zm = z_map(z);
  Scalar alpha = zm.at(index_of(z, "p")), beta = zm.at(index_of(z, "p+r"));
  CHECK(!alpha.is_zero());
  CHECK((beta == alpha * Scalar(3L) || beta == alpha * Scalar(-3L)));
  CHECK(zm.at(index_of(z, "r")).is_zero());
  CHECK(slope(z, "2p", "r", "2p+r").is_zero());
  CHECK(zm.at(index_of(z, "3p")) == -alpha);

  // z_p + z_q + z_r = s on every triple.
  for (auto& t : triples(z))
    CHECK(zm.at(t.idx[0]) + zm.at(t.idx[1]) + zm.at(t.idx[2]) == line_of(z, t).s);

  // The 2-torsion x-values are the roots of x^3 - 208/3 a^4 x + 4480/27 a^6.
  auto model = curves::to_short_weierstrass(e);
  Scalar a2 = alpha * alpha;
  CHECK(model.to_short(p).x() == a2 * Scalar(mpq_class(-4, 3)));
  CHECK(model.to_short(z.evaluate("p+r")).x() == a2 * Scalar(mpq_class(44, 3)));
  for (auto [label, c] : {std::pair{"2p", mpq_class(20, 3)}, {"r", mpq_class(-28, 3)}, {"2p+r", mpq_class(8, 3)}}) {
    Scalar x = model.to_short(z.evaluate(label)).x();
    CHECK(x == a2 * Scalar(c));
    CHECK(x * x * x - x * a2 * a2 * Scalar(mpq_class(208, 3)) + a2 * a2 * a2 * Scalar(mpq_class(4480, 27)) ==
          Scalar(0L));
  }

  auto pairs = parallel_pairs(z);
  REQUIRE(!pairs.empty());
  Divisor target = make_divisor(e, {{3, z.evaluate("p+r")}, {-5, p}});
  for (auto& pr : pairs) {
    auto c = relation_divisor(z, pr);
    if (c->divisor.is_zero()) continue;
    CHECK(eliminate({c}, target).size() == 1);
    CHECK(vanishes(c->divisor));
  }
}

TEST_CASE("24A1 x-values from the linear conditions") {
  // Over Q(a), with z_p = a and z_{p+r} = 3a, solve x_q + x_q' + x_q'' = s^2
  // for the five x-values.
  auto Qa = Field::rational_functions("a");
  Scalar a = Scalar::generator(Qa), zero(Qa, mpq_class(0)), one(Qa, mpq_class(1));
  // z on p, 2p, 3p, r, p+r, 2p+r, 3p+r (z_{-q} = -z_q, z of 2-torsion is 0).
  std::map<std::string, Scalar> zv = {{"p", a}, {"2p", zero}, {"3p", -a}, {"r", zero},
                                      {"p+r", a * Scalar(3L)}, {"2p+r", zero}, {"3p+r", -(a * Scalar(3L))}};
  // Unknowns: x_p (= x_3p), x_2p, x_r, x_{p+r} (= x_{3p+r}), x_{2p+r}.
  std::map<std::string, int> var = {{"p", 0}, {"3p", 0}, {"2p", 1}, {"r", 2}, {"p+r", 3}, {"3p+r", 3}, {"2p+r", 4}};
  std::vector<std::array<std::string, 3>> trip = {{"p", "p", "2p"},    {"p", "r", "3p+r"},     {"p", "2p+r", "p+r"},
                                                  {"2p", "r", "2p+r"}, {"p+r", "p+r", "2p"}, {"3p", "3p", "2p"}};
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (auto& t : trip) {
    std::vector<Scalar> row(5, zero);
    Scalar s = zero;
    for (auto& q : t) {
      row[var.at(q)] += one;
      s += zv.at(q);
    }
    rows.push_back(row);
    rhs.push_back(s * s);
  }
  auto x = exact::solve_linear(rows, rhs);
  REQUIRE(x.has_value());
  Scalar a2 = a * a;
  CHECK((*x)[0] == a2 * Scalar(mpq_class(-4, 3)));
  CHECK((*x)[1] == a2 * Scalar(mpq_class(20, 3)));
  CHECK((*x)[2] == a2 * Scalar(mpq_class(-28, 3)));
  CHECK((*x)[3] == a2 * Scalar(mpq_class(44, 3)));
  CHECK((*x)[4] == a2 * Scalar(mpq_class(8, 3)));
}

TEST_CASE("tangent at a 3-torsion point is parallel to the line through 2p + E[2]") {
  const auto& f = z36();
  auto pairs = parallel_pairs(f.z);
  Triple tangent = triple(f.z, "3A", "3A", "3A");
  Triple chord = triple(f.z, "6A+Q", "6A+Q'", "6A+Q+Q'");
  REQUIRE(has_pair(pairs, tangent, chord));
  auto c = relation_divisor(f.z, find_pair(pairs, tangent, chord));
  Divisor expect = make_divisor(f.e, {{6, f.at("6A+Q")}, {6, f.at("6A+Q'")}, {6, f.at("6A+Q+Q'")}, {-9, f.at("3A")}});
  CHECK((c->divisor == expect || c->divisor == -expect));
}

TEST_CASE("Z36 certificates and the trace elimination") {
  const auto& f = z36();
  const Subgroup& z = f.z;
  auto pairs = parallel_pairs(z);
  Triple l1 = triple(z, "A", "A+Q'", "-2A+Q'"), l2 = triple(z, "2A", "3A+Q+Q'", "4A+Q+Q'");
  REQUIRE(has_pair(pairs, l1, l2));
  const auto& pr = find_pair(pairs, l1, l2);
  // -gamma - 1 once shifted back to the Deuring coordinates.
  Scalar gamma = exact::cyclotomic7_constants().gamma;
  CHECK(pr.slope - curves::to_short_weierstrass(f.e).slope_shift() == -gamma - Scalar(1L));

  auto d1 = relation_divisor(z, pr);
  Divisor expect(f.e);
  for (auto [c, s] : std::vector<std::pair<long, std::string>>{{-4, "A"},       {3, "2A"},        {-1, "2A+Q"},
                                                                {1, "4A+Q"},     {-4, "A+Q'"},     {3, "2A+Q'"},
                                                                {-1, "4A+Q'"},   {-1, "2A+Q+Q'"}, {2, "3A+Q+Q'"},
                                                                {3, "4A+Q+Q'"}})
    expect += make_divisor(f.e, {{c, f.at(s)}});
  CHECK((d1->divisor == expect || d1->divisor == -expect));
  CHECK(vanishes(d1->divisor));
  CHECK(replay(*d1));

  auto t1 = galois_trace(d1);
  std::string ts = trace_string(t1->divisor, z);
  CHECK((ts == "-7Tr[A] + 2Tr[A+Q] - 4Tr[A+Q'] + 2Tr[3A+Q']" ||
         ts == "7Tr[A] - 2Tr[A+Q] + 4Tr[A+Q'] - 2Tr[3A+Q']"));
  CHECK(vanishes(t1->divisor));

  auto ma = galois_trace(mult2_relation(f.e, f.at("A")));
  CHECK(trace_string(ma->divisor, z) == "3Tr[A] + 2Tr[A+Q] + 4Tr[A+Q']");
  CHECK(vanishes(ma->divisor));
  auto m3a = galois_trace(mult2_relation(f.e, f.at("3A")));
  CHECK(vanishes(m3a->divisor));

  // Order 2: the relation collapses to nothing.
  CHECK(mult2_relation(f.e, f.at("Q"))->divisor.is_zero());

  // A Q-rational divisor traces to 6 times itself.
  Divisor rat = make_divisor(f.e, {{1, f.at("3A")}, {-2, f.at("3A+Q")}});
  CHECK(galois_trace(rat) == rat * 6);

  // The second pair adds nothing new.
  Triple l3 = triple(z, "A", "A", "-2A"), l4 = triple(z, "-4A+Q", "2A+Q'", "2A+Q+Q'");
  REQUIRE(has_pair(pairs, l3, l4));
  auto t2 = galois_trace(relation_divisor(z, find_pair(pairs, l3, l4)));
  CHECK(vanishes(t2->divisor));
  CHECK_NOTHROW(eliminate({t1, ma, m3a}, t2->divisor));

  // -([A]+[4A]+[7A]) + [A+Q]+[4A+Q]+[7A+Q] - 3[3A] needs the Gamma1(6)
  // relation at P = 3A as well.
  Divisor target = make_divisor(f.e, {{-1, f.at("A")},
                                      {-1, f.at("4A")},
                                      {-1, f.at("7A")},
                                      {1, f.at("A+Q")},
                                      {1, f.at("4A+Q")},
                                      {1, f.at("7A+Q")},
                                      {-3, f.at("3A")}});
  CHECK_THROWS_AS(eliminate({t1, ma, m3a}, target * 6), NotInSpan);
  Subgroup z6({{"p", -(f.at("3A") + f.at("Q"))}});
  std::vector<CertificatePtr> certs = {t1, ma, m3a};
  for (auto& p6 : parallel_pairs(z6)) certs.push_back(relation_divisor(z6, p6));
  auto combo = combine(certs, target);
  CHECK(combo->divisor == target);
  CHECK(replay(*combo));
  CHECK(vanishes(target));

  // JSON round trip.
  auto back = certificate_from_json(to_json(*combo, &z), f.e);
  CHECK(back->divisor == combo->divisor);
  CHECK(replay(*back));
  auto d1back = certificate_from_json(to_json(*d1, &z), f.e);
  CHECK(d1back->kind == Certificate::Kind::parallel_pair);
  CHECK(d1back->divisor == d1->divisor);
}

TEST_CASE("elimination edge cases") {
  auto e = Curve::family_g(Scalar(1L));
  Subgroup z = cyclic6(e);
  auto pairs = parallel_pairs(z);
  auto c = relation_divisor(z, pairs[0]);
  CHECK(eliminate({c}, c->divisor) == std::vector<mpq_class>{1});
  CHECK(eliminate({c}, c->divisor * 3) == std::vector<mpq_class>{3});
  // 2-torsion is ignored.
  Divisor shifted = c->divisor + make_divisor(e, {{1, e->named("Q")}});
  CHECK(eliminate({c}, shifted) == std::vector<mpq_class>{1});
  try {
    eliminate({c}, make_divisor(e, {{1, e->named("P")}}));
    FAIL("expected NotInSpan");
  } catch (const NotInSpan& err) {
    CHECK(!err.support.empty());
  }
  CHECK_THROWS_AS(relation_divisor(z, ParallelPair{pairs[0].first, pairs[0].first, pairs[0].slope}), IdenticalTriples);
  CHECK_THROWS_AS(mult2_relation(e, e->named("P")), MissingTorsion);
  CHECK(std::string(kind_name(Certificate::Kind::parallel_pair)) == "parallel_pair");
  CHECK(as_cert(c->divisor)->divisor == c->divisor);
}

TEST_CASE("z-map under isogenies") {
  const auto& f = z36();
  auto iso = curves::rho3_g1_to_g7(f.e->field());
  auto tgt = iso.target;
  Subgroup zt({{"P", tgt->named("P")}, {"Q", tgt->named("Q")}});
  Subgroup zs({{"A", f.at("A")}, {"Q", f.at("Q")}});
  auto zmt = z_map(zt), zms = z_map(zs);
  for (size_t i = 0; i < zt.size(); ++i) {
    const Point& p = zt.elements()[i].point;
    if (p.is_zero()) continue;
    CAPTURE(zt.elements()[i].label);
    Scalar sum(f.e->field(), mpq_class(0));
    for (auto& q : preimages(iso, p)) sum += zms.at(index_of(zs, zs.label(q)));
    CHECK(zmt.at(i) == sum / iso.lambda);
  }

  // Multiplication by 2: z_{2q} = z over the halves, i.e. z_p = 1/2 sum z_{q_i}.
  auto zm = z_map(f.z);
  for (std::string lbl : {"A", "3A+Q'", "2A+Q"}) {
    Point q = f.at(lbl);
    Scalar sum(f.e->field(), mpq_class(0));
    for (std::string r : {"0", "Q", "Q'", "Q+Q'"}) sum += zm.at(index_of(f.z, lbl + (r == "0" ? "" : "+" + r)));
    CHECK(zm.at(index_of(f.z, f.z.label(q + q))) == sum / Scalar(2L));
  }
}

TEST_CASE("trace commutes with normalize") {
  const auto& f = z36();
  auto conj = [&](const Point& p, long e) {
    return p.is_zero() ? p : Point(f.e, p.x().galois(e), p.y().galois(e));
  };
  std::mt19937 rng(14);
  const auto& el = f.z.elements();
  for (int trial = 0; trial < 8; ++trial) {
    divisors::FormalSum raw(f.e), traced(f.e);
    for (int i = 0; i < 5; ++i) {
      const Point& p = el[rng() % el.size()].point;
      long c = long(rng() % 7) - 3;
      raw.add(p, c);
      for (long e = 1; e < 7; ++e) traced.add(conj(p, e), c);
    }
    CHECK(galois_trace(divisors::normalize(raw)) == divisors::normalize(traced));
  }
}

TEST_CASE("24A1: the other parallel cases are relabellings") {
  auto e = Curve::weierstrass(Scalar(0L), Scalar(-1L), Scalar(0L), Scalar(-4L), Scalar(4L));
  Point p(e, Scalar(0L), Scalar(2L)), r(e, Scalar(-2L), Scalar(0L));
  auto ratio = [&](const Point& g) {
    Subgroup z({{"p", g}, {"r", r}});
    auto zm = z_map(z);
    return (zm.at(index_of(z, "p+r")) / zm.at(index_of(z, "p"))).to_rational();
  };
  // p -> p+r swaps alpha and beta; p -> -p and p -> -p-r flip signs.
  mpq_class b = ratio(p);
  CHECK(abs(b) == 3);
  CHECK(ratio(p + r) == 1 / b);
  CHECK(ratio(-p) == b);
  CHECK(ratio(-(p + r)) == 1 / b);
}

TEST_CASE("generator P+Q gives the same k = 1 pairs") {
  auto e = Curve::family_g(Scalar(1L));
  Subgroup z({{"p", e->named("P") + e->named("Q")}});
  auto pairs = parallel_pairs(z);
  CHECK(pairs.size() == 2);
  CHECK(has_pair(pairs, triple(z, "p", "2p", "3p"), triple(z, "4p", "4p", "4p")));
  CHECK(has_pair(pairs, triple(z, "3p", "4p", "5p"), triple(z, "2p", "2p", "2p")));
}
