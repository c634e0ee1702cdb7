#include "boyd14/mahler/measure.hpp"

#include <algorithm>
#include <cmath>

#include "boyd14/numerics/polyroots.hpp"
#include "boyd14/numerics/quadrature.hpp"

namespace boyd14::mahler {

using exact::QPoly;
using numerics::Complex;

namespace {

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const size_t n = m.size();
  mpq_class d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Newton interpolation through (x_i, y_i).
QPoly interpolate(const std::vector<mpq_class>& xs, std::vector<mpq_class> ys) {
  const size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  QPoly r(ys[n - 1]);
  for (size_t i = n - 1; i-- > 0;) r = r * QPoly(std::vector<mpq_class>{-xs[i], 1}) + QPoly(ys[i]);
  return r;
}

int y_degree(const std::vector<QPoly>& a) {
  int d = 0;
  for (auto& c : a) d = std::max(d, c.degree());
  return d;
}

// log|lead| + sum of log+ |roots|.
Real jensen(const QPoly& c, unsigned bits, std::vector<Complex>* roots_out = nullptr) {
  std::vector<Real> coeffs;
  for (auto& q : c.coeffs()) coeffs.emplace_back(q, bits);
  Real s = numerics::log(numerics::abs(Real(c.lead(), bits)));
  if (c.degree() <= 0) return s;
  auto roots = numerics::polyroots(coeffs, bits);
  for (auto& r : roots) {
    Real m = abs(r);
    if (m > Real(1L, bits)) s += numerics::log(m);
  }
  if (roots_out) *roots_out = roots;
  return s;
}

// Arguments in [0, pi] of the roots of f on the unit circle.
std::vector<double> unit_circle_args(const QPoly& f) {
  std::vector<double> out;
  if (f.degree() <= 0) return out;
  QPoly sf = f / exact::gcd(f, f.derivative());
  if (sf.degree() <= 0) return out;
  const unsigned bits = 256;
  std::vector<Real> coeffs;
  for (auto& q : sf.coeffs()) coeffs.emplace_back(q, bits);
  for (auto& r : numerics::polyroots(coeffs, bits)) {
    double m = abs(r).to_double();
    if (std::fabs(m - 1) < 1e-12) out.push_back(std::fabs(arg(r).to_double()));
  }
  return out;
}

std::vector<QPoly> divide_all(const std::vector<QPoly>& a, const QPoly& c) {
  std::vector<QPoly> out;
  for (auto& x : a) out.push_back(x / c);
  return out;
}

QPoly content(const std::vector<QPoly>& a) {
  QPoly g;
  for (auto& x : a) g = exact::gcd(g, x);
  return g;
}

}  // namespace

exact::QPoly resultant_z(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  if (a.empty() || b.empty()) return QPoly();
  const size_t m = a.size() - 1, n = b.size() - 1;
  const int D = static_cast<int>(n) * y_degree(a) + static_cast<int>(m) * y_degree(b);
  std::vector<mpq_class> xs, vals;
  for (int t = 0; t <= D; ++t) {
    mpq_class y0 = t;
    std::vector<std::vector<mpq_class>> s(m + n, std::vector<mpq_class>(m + n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k].eval(y0);
    for (size_t i = 0; i < m; ++i)
      for (size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k].eval(y0);
    xs.push_back(y0);
    vals.push_back(det(std::move(s)));
  }
  return interpolate(xs, vals);
}

MahlerResult mahler_measure(const BivariatePoly& p_in, unsigned digits) {
  if (p_in.is_zero()) throw MahlerError("mahler_measure: zero polynomial");
  const unsigned bits = numerics::bits_for_digits(digits) + 64;
  MahlerResult out{Real::zero(bits), Real::zero(bits), false, {}};

  BivariatePoly p = p_in.normalized();
  int dy = 0, dz = 0;
  for (auto& [e, c] : p.terms()) {
    dy = std::max(dy, e.first);
    dz = std::max(dz, e.second);
  }
  if (dz > dy) p = p.swap_variables();

  // Split off factors in one variable; their measure is Jensen's formula.
  auto split = [&](std::vector<QPoly> a) {
    QPoly c = content(a);
    if (c.degree() > 0) {
      std::vector<Complex> roots;
      out.value += jensen(c, bits, &roots);
      for (auto& r : roots)
        if (std::fabs(abs(r).to_double() - 1) < 1e-12) out.vanishes_on_torus = true;
      a = divide_all(a, c);
    }
    return a;
  };
  std::vector<QPoly> a = split(p.coefficients_in_z());
  BivariatePoly sw = BivariatePoly::from_coefficients_in_z(a).swap_variables();
  a = BivariatePoly::from_coefficients_in_z(split(sw.coefficients_in_z())).swap_variables().coefficients_in_z();
  while (!a.empty() && a.back().is_zero()) a.pop_back();

  if (a.size() <= 1) {
    out.value += jensen(a.at(0), bits);
    return out;
  }

  // Kinks of the integrand: zeros on the torus, double roots, and vanishing
  // of the leading coefficient.
  BivariatePoly p2 = BivariatePoly::from_coefficients_in_z(a);
  int ey = y_degree(a), ez = static_cast<int>(a.size()) - 1;
  BivariatePoly rec;
  for (auto& [e, c] : p2.terms()) rec.add(ey - e.first, ez - e.second, c);
  std::vector<QPoly> da;
  for (size_t j = 1; j < a.size(); ++j) da.push_back(a[j] * QPoly(mpq_class(static_cast<long>(j))));
  std::vector<double> cand = {0.0, M_PI};
  for (const QPoly& f : {a.back(), resultant_z(a, rec.coefficients_in_z()), resultant_z(a, da)})
    for (double t : unit_circle_args(f)) cand.push_back(t);
  std::sort(cand.begin(), cand.end());
  std::vector<double> breaks;
  for (double t : cand)
    if (breaks.empty() || t - breaks.back() > 1e-12) breaks.push_back(t);
  breaks.back() = M_PI;

  auto z_roots = [&](const Real& theta, unsigned prec, Complex* lead) {
    Complex y = numerics::expi(theta.with_precision(prec));
    std::vector<Complex> c;
    for (auto& q : a) c.push_back(q.eval(y));
    *lead = c.back();
    return numerics::polyroots(c, prec);
  };
  auto integrand = [&](const Real& theta) {
    Complex lead;
    auto roots = z_roots(theta, bits, &lead);
    Real s = numerics::log(abs(lead));
    for (auto& r : roots) {
      Real m = abs(r);
      if (m > Real(1L, bits)) s += numerics::log(m);
    }
    return s;
  };

  for (double t : breaks) {
    Complex lead;
    for (auto& r : z_roots(Real(t, 128), 128, &lead))
      if (std::fabs(abs(r).to_double() - 1) < 1e-8) out.vanishes_on_torus = true;
  }
  for (size_t i = 1; i + 1 < breaks.size(); ++i) out.breakpoints.push_back(breaks[i]);

  // theta = lo + (hi - lo) s^2 (3 - 2 s) flattens square-root behaviour at
  // both ends of a panel.
  Real tol = numerics::pow(Real(10L, bits), -static_cast<long>(digits) - 3);
  numerics::QuadratureOptions opts;
  opts.bits = bits;
  Real integral = Real::zero(bits), err = Real::zero(bits);
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    Real lo(breaks[i], bits), hi(breaks[i + 1], bits);
    if (i == 0) lo = Real::zero(bits);
    if (i + 2 == breaks.size()) hi = numerics::pi(bits);
    Real w = hi - lo;
    auto g = [&](const Real& s) {
      Real phi = s * s * (Real(3L, bits) - s * 2L);
      Real dphi = s * (Real(1L, bits) - s) * 6L;
      return integrand(lo + w * phi) * w * dphi;
    };
    auto e = numerics::integrate(g, Real::zero(bits), Real(1L, bits), tol, opts);
    integral += e.value;
    err += e.error;
  }
  Real P = numerics::pi(bits);
  out.value += integral / P;
  out.error = err / P;
  return out;
}

BivariatePoly family_polynomial(curves::Family family, const mpq_class& k) {
  BivariatePoly y = BivariatePoly::y(), z = BivariatePoly::z(), one = BivariatePoly::constant(1);
  switch (family) {
    case curves::Family::n:
      return y.pow(3) + z.pow(3) + one - y * z * k;
    case curves::Family::g:
      return (one + y) * (one + z) * (y + z) - y * z * k;
    default:
      throw std::invalid_argument("family_polynomial: no family");
  }
}

MahlerResult family_measure(curves::Family family, const mpq_class& k, unsigned digits) {
  return mahler_measure(family_polynomial(family, k), digits);
}

Classification classify(curves::Family family, const mpq_class& k) {
  if (family == curves::Family::n) return {k == 3, k < 3 ? 1 : 2, k >= -1 && k <= 3};
  if (family == curves::Family::g)
    return {k == -1 || k == 0 || k == 8, (k > 0 && k < 8) ? 1 : 2, k >= -1 && k <= 8};
  throw std::invalid_argument("classify: no family");
}

}  // namespace boyd14::mahler
