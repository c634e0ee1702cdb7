#include "boyd14/pipeline/verify.hpp"

#include <chrono>
#include <cmath>

#include "boyd14/modforms/qseries.hpp"
#include "boyd14/modforms/walgebra.hpp"
#include "boyd14/uniformization/lattice.hpp"

namespace boyd14::pipeline {

using curves::Curve;
using curves::Family;
using exact::Field;
using exact::Scalar;
using linesearch::CertificatePtr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

Real times(const mpq_class& c, const Real& x) { return Real(c, x.precision()) * x; }

// -[A]-[4A]-[7A]+[A+Q]+[4A+Q]+[7A+Q] on E_g(1) over Q(zeta7).
Divisor bridge_divisor(const CurvePtr& e) {
  Point a = e->named("A"), q = e->named("Q");
  divisors::FormalSum s(e);
  for (long m : {1L, 4L, 7L}) {
    s.add(a.times(m), -1);
    s.add(a.times(m) + q, 1);
  }
  return divisors::normalize(s);
}

CurvePtr g1_zeta7() { return Curve::family_g(Scalar(1L))->over(Field::cyclotomic(7, "g")); }

}  // namespace

double exact_tolerance(unsigned digits) { return std::pow(10.0, -(static_cast<double>(digits) - 10)); }

const std::vector<Conjecture>& conjectures() {
  static const std::vector<Conjecture> table = {
      {1, Family::n, -1, 7, 9, "n(-1)"},
      {2, Family::n, 5, mpq_class(49, 2), mpq_class(63, 2), "n(5)"},
      {3, Family::g, 1, mpq_class(7, 2), mpq_class(9, 2), "g(1)"},
      {4, Family::g, 7, 21, 27, "g(7)"},
      {5, Family::g, -8, 35, 45, "g(-8)"},
  };
  return table;
}

const Conjecture& conjecture(int id) {
  for (auto& c : conjectures())
    if (c.id == id) return c;
  throw std::invalid_argument("conjecture id must be 1..5, got " + std::to_string(id));
}

Real deninger_value(Family family, long k, unsigned bits, const Cache* cache) {
  int c = uniformization::deninger_constant(family, k);
  Real pi = numerics::pi(bits);
  if (family == Family::n) {
    CurvePtr e = Curve::family_n(Scalar(Field::cyclotomic(3, "w"), mpq_class(k)));
    Point p = e->named("P"), q = e->named("Q");
    Divisor d = divisors::make_divisor(e, {{1, p}, {1, p + q}, {1, p - q}});
    return r_value(d, bits, cache) * static_cast<long>(-9 * c) / (pi * 2L);
  }
  CurvePtr e = Curve::family_g(Scalar(k));
  Divisor d = divisors::make_divisor(e, {{1, e->named("P+Q")}, {-1, e->named("P")}});
  return r_value(d, bits, cache) * static_cast<long>(3 * c) / pi;
}

Report run_conjecture(int id, const Settings& s) {
  auto t0 = Clock::now();
  const Conjecture& cj = conjecture(id);
  unsigned bits = bits_for_digits(s.digits);
  Real pi = numerics::pi(bits);

  auto m = stage("mahler", [&] { return family_m(cj.family, cj.k, s.mahler_digits, s.cache); });
  auto l2 = stage("lvalue", [&] { return l_f14(2, bits, s.cache); });
  Real l_route = times(cj.l_coefficient, l2.value) / (pi * pi);
  Real den = stage("deninger", [&] { return deninger_value(cj.family, cj.k, bits, s.cache); });
  Real rp = stage("dilog", [&] {
    CurvePtr g1 = Curve::family_g(Scalar(1L));
    return r_value(divisors::make_divisor(g1, {{1, g1->named("P")}}), bits, s.cache);
  });
  Real reduced = times(cj.route_coefficient, rp) / pi;

  Report r;
  r.command = "verify boyd";
  r.subject = cj.name;
  r.digits = s.digits;
  r.precision = {{"real_bits", bits},
                 {"mahler_digits", s.mahler_digits},
                 {"mahler_error", m.error.to_string(3)},
                 {"l_terms", l2.terms},
                 {"root_number", l2.root_number}};
  std::string lc = cj.l_coefficient.get_str(), rc = cj.route_coefficient.get_str();
  std::string m_expr = std::string("m(P) = ") + cj.name + " by quadrature";
  double tight = exact_tolerance(s.digits);
  r.checks.push_back({"mahler vs L-value", m_expr, lc + "/pi^2 L(f14,2)", m.value, l_route, 1e-8, true});
  r.checks.push_back({"mahler vs Deninger", m_expr, "Deninger formula on the family curve", m.value, den, 1e-8, true});
  r.checks.push_back(
      {"Deninger vs reduced dilogarithm", "Deninger formula on the family curve", rc + "/pi R_{E_g(1)}(P)", den, reduced,
       tight, true});
  r.checks.push_back({"reduced dilogarithm vs L-value", rc + "/pi R_{E_g(1)}(P)", lc + "/pi^2 L(f14,2)", reduced,
                      l_route, tight, true});
  r.extra = {{"family", cj.family == Family::n ? "n" : "g"},
             {"k", cj.k},
             {"c", lc},
             {"m", m.value.to_string(static_cast<int>(s.mahler_digits))},
             {"m_pi2_over_L", (m.value * pi * pi / l2.value).to_string(static_cast<int>(s.mahler_digits))}};
  r.wall_seconds = seconds_since(t0);
  return r;
}

CertificatePtr bridge_certificate() {
  using namespace linesearch;
  CurvePtr e = g1_zeta7();
  Subgroup z({{"A", e->named("A")}, {"Q", e->named("Q")}, {"Q'", e->named("Q'")}});
  Scalar shift = curves::to_short_weierstrass(e).slope_shift();
  Scalar want = -exact::cyclotomic7_constants().gamma - Scalar(1L);
  std::optional<ParallelPair> d1;
  for (auto& p : parallel_pairs(z))
    if (p.slope - shift == want) {
      d1 = p;
      break;
    }
  if (!d1) throw std::runtime_error("bridge_certificate: no parallel pair of slope -gamma-1");
  std::vector<CertificatePtr> certs = {galois_trace(relation_divisor(z, *d1)),
                                       galois_trace(mult2_relation(e, z.evaluate("A"))),
                                       galois_trace(mult2_relation(e, z.evaluate("3A")))};
  Subgroup z6({{"p", -(e->named("P") + e->named("Q"))}});
  for (auto& p : parallel_pairs(z6)) certs.push_back(relation_divisor(z6, p));
  Divisor target = bridge_divisor(e) + divisors::make_divisor(e, {{-3, e->named("P")}});
  return combine(certs, target);
}

Report run_keystone(const Settings& s) {
  auto t0 = Clock::now();
  unsigned bits = bits_for_digits(s.digits);
  Real pi = numerics::pi(bits);
  double tight = exact_tolerance(s.digits);

  auto l2 = stage("lvalue", [&] { return l_f14(2, bits, s.cache); });
  auto l1 = stage("lvalue", [&] { return l_f14(1, bits, s.cache); });
  CurvePtr g1 = Curve::family_g(Scalar(1L)), g7 = Curve::family_g(Scalar(7L));
  Real r1 = stage("dilog", [&] { return r_value(divisors::make_divisor(g1, {{1, g1->named("P")}}), bits, s.cache); });
  Real r7 = stage("dilog", [&] {
    return r_value(divisors::make_divisor(g7, {{1, g7->named("P+Q")}, {-1, g7->named("P")}}), bits, s.cache);
  });
  CurvePtr gz = g1_zeta7();
  Real rb = stage("dilog", [&] { return r_value(bridge_divisor(gz), bits, s.cache); });
  Real omega = stage("periods", [&] {
    return uniformization::lattice_of(Curve::deuring(Scalar(5L), Scalar(7L)), bits)->omega_real;
  });

  Report r;
  r.command = "verify keystone";
  r.subject = "keystone identities";
  r.digits = s.digits;
  r.precision = {{"real_bits", bits}, {"l_terms", l2.terms}, {"root_number", l2.root_number}};
  const std::string bridge = "R_{E_g(1)}(-[A]-[4A]-[7A]+[A+Q]+[4A+Q]+[7A+Q])";
  r.checks.push_back({"keystone E_g(1)", "R_{E_g(1)}(P)", "7/(9 pi) L(f14,2)", r1, l2.value * 7L / (pi * 9L), tight,
                      false});
  r.checks.push_back(
      {"keystone E_g(7)", "R_{E_g(7)}([P+Q]-[P])", "7/pi L(f14,2)", r7, l2.value * 7L / pi, tight, false});
  r.checks.push_back({"3-isogeny E_g(1) -> E_g(7)", "R_{E_g(7)}([P+Q]-[P])", "3 " + bridge, r7, rb * 3L, tight, false});
  r.checks.push_back({"bridge relation", "3 R_{E_g(1)}(P)", bridge, r1 * 3L, rb, tight, false});
  r.checks.push_back({"L(f14,1) against the real period", "6 L(f14,1)", "Omega(14A1)", l1.value * 6L, omega, tight, true});

  auto cert = stage("linesearch", [&] { return bridge_certificate(); });
  CurvePtr ce = cert->divisor.curve();
  Divisor target = bridge_divisor(ce) + divisors::make_divisor(ce, {{-3, ce->named("P")}});
  r.exact.push_back({"bridge certificate replays", linesearch::replay(*cert), "provenance rebuilds the divisor"});
  r.exact.push_back({"bridge certificate divisor", cert->divisor == target,
                     "-([A]+[4A]+[7A]) + [A+Q]+[4A+Q]+[7A+Q] - 3[3A]"});
  std::string weights;
  for (auto& w : cert->weights) weights += (weights.empty() ? "" : ", ") + w.get_str();
  r.exact.back().detail += "; weights " + weights;

  auto a = modforms::coefficient_list(modforms::newform_14(10));
  auto signs = modforms::atkin_lehner_signs(14, a);
  using modforms::WElem;
  WElem alpha = WElem::w(14, 7, 3) - WElem::identity(14) * mpq_class(3);
  WElem beta = WElem::w(14, 2, 2) - WElem::identity(14) * mpq_class(2);
  mpq_class bc = modforms::beilinson_coefficient(14, alpha, beta, signs);
  r.exact.push_back({"Beilinson coefficient", bc == mpq_class(-1, 8), "epsilon(w14 alpha' gamma*(beta')) = " + bc.get_str()});

  curves::Subgroup labels({{"A", ce->named("A")}, {"Q", ce->named("Q")}, {"Q'", ce->named("Q'")}});
  r.certificates.push_back(linesearch::to_json(*cert, &labels));
  r.wall_seconds = seconds_since(t0);
  return r;
}

}  // namespace boyd14::pipeline
