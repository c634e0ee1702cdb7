#include "boyd14/uniformization/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <mutex>
#include <shared_mutex>

#include "boyd14/numerics/polyroots.hpp"
#include "boyd14/numerics/special.hpp"

namespace boyd14::uniformization {

using curves::CurvePtr;
using curves::Point;
using curves::Scalar;
using numerics::agm;
using numerics::pi;

namespace {

unsigned embedding_index(const exact::FieldPtr& f, int requested) {
  if (requested >= 0) return static_cast<unsigned>(requested);
  return f->cyclotomic_order() ? f->principal_embedding() : 0;
}

Complex embed(const Scalar& s, unsigned index, unsigned bits) { return s.embed(index, bits); }

Real real_part(const Complex& z, const char* what) {
  Real scale = numerics::max(abs(z.re), Real(1L, z.precision()));
  if (abs(z.im) > scale * numerics::ldexp_one(-static_cast<long>(z.precision()) / 2, z.precision()))
    throw NotReal(std::string(what) + " is not real under the chosen embedding");
  return z.re;
}

// SL2(Z) element carrying tau into the standard fundamental domain.
struct Reduced {
  Complex tau;
  Complex factor;  // c tau + d
};

Reduced reduce(const Complex& tau) {
  unsigned bits = tau.precision();
  Complex t = tau;
  long a = 1, b = 0, c = 0, d = 1;
  for (int iter = 0; iter < 200; ++iter) {
    long n = numerics::floor(t.re + Real(0.5, bits)).to_long();
    if (n != 0) {
      t.re -= Real(n, bits);
      a -= n * c;
      b -= n * d;
    }
    if (norm(t) >= Real(1L, bits) - numerics::ldexp_one(-static_cast<long>(bits) + 8, bits)) break;
    t = Complex(-1L * t.re, t.im) / norm(t);  // -1/t
    long na = -c, nb = -d;
    c = a;
    d = b;
    a = na;
    b = nb;
  }
  return {t, tau * Real(c, bits) + Complex(Real(d, bits))};
}

// q-expansions on <1, tau> for tau in the fundamental domain.
WeierstrassValue series(Complex u, const Complex& tau) {
  unsigned bits = std::min(u.precision(), tau.precision());
  Real alpha = u.im / tau.im;
  Real na = numerics::floor(alpha + Real(0.5, bits));
  u -= tau * na;
  u.re -= numerics::floor(u.re + Real(0.5, bits));

  Complex q = numerics::exp2pii(tau), w = numerics::exp2pii(u), winv = Complex(Real(1L, bits)) / w;
  Complex one(Real(1L, bits));
  auto f = [&](const Complex& x) {
    Complex m = one - x;
    return x / (m * m);
  };
  auto g = [&](const Complex& x) {
    Complex m = one - x;
    return x * (one + x) / (m * m * m);
  };
  Complex s = f(w) + Complex(Real(1L, bits) / 12);
  Complex ds = g(w);
  Real eps = numerics::ldexp_one(-static_cast<long>(bits) - 16, bits);
  Complex qn = q;
  for (int n = 1; n < 100000; ++n) {
    Complex x = qn * w, y = qn * winv;
    s += f(x) + f(y) - f(qn) * 2L;
    ds += g(x) - g(y);
    if (abs(x) < eps && abs(y) < eps) break;
    qn *= q;
  }
  Real twopi = pi(bits) * 2L;
  Real tp2 = twopi * twopi;
  // (2 pi i)^2 = -(2 pi)^2, (2 pi i)^3 = -i (2 pi)^3.
  WeierstrassValue out;
  out.p = s * (-tp2);
  out.dp = Complex(ds.im, -ds.re) * (tp2 * twopi);
  return out;
}

struct Cache {
  std::shared_mutex mutex;
  std::map<std::string, std::shared_ptr<const RealLattice>> values;
};

Cache& cache() {
  static Cache c;
  return c;
}

std::shared_ptr<const RealLattice> compute_lattice(const CurvePtr& c, unsigned bits) {
  unsigned work = bits + 32;
  unsigned idx = embedding_index(c->field(), -1);
  Real A = real_part(embed(-c->c4() / Scalar(48L), idx, work), "a4");
  Real B = real_part(embed(-c->c6() / Scalar(864L), idx, work), "a6");
  Real disc = real_part(embed(c->discriminant(), idx, work), "discriminant");
  auto roots = numerics::polyroots(std::vector<Real>{B, A, Real::zero(work), Real(1L, work)}, work);

  auto lat = std::make_shared<RealLattice>();
  Real P = pi(work);
  Complex omega2;
  Real omega1;
  if (disc.sign() > 0) {
    std::vector<Real> e;
    for (auto& r : roots) e.push_back(r.re);
    std::sort(e.begin(), e.end(), [](const Real& x, const Real& y) { return x > y; });
    omega1 = P / agm(sqrt(e[0] - e[2]), sqrt(e[0] - e[1]));
    omega2 = Complex(Real::zero(work), P / agm(sqrt(e[0] - e[2]), sqrt(e[1] - e[2])));
    lat->components = 2;
  } else {
    auto it = std::min_element(roots.begin(), roots.end(),
                               [](const Complex& x, const Complex& y) { return abs(x.im) < abs(y.im); });
    Real e1 = it->re;
    Real b = sqrt(Real(3L, work) * e1 * e1 + A);
    Real a = e1 * 3L;
    omega1 = P * 2L / agm(sqrt(b) * 2L, sqrt(b * 2L + a));
    omega2 = Complex(-omega1 / 2L, P / agm(sqrt(b) * 2L, sqrt(b * 2L - a)));
    lat->components = 1;
  }
  Complex tau = omega2 / omega1;
  if (tau.re < Real(-0.25, work)) tau.re += Real(1L, work);
  if (lat->components == 2) tau.re = Real::zero(work);
  else tau.re = Real(0.5, work);
  lat->tau = tau.with_precision(bits);
  lat->omega_real = omega1.with_precision(bits);
  return lat;
}

}  // namespace

std::shared_ptr<const RealLattice> lattice_of(const CurvePtr& c, unsigned bits) {
  std::string key = c->field()->name() + "|" + std::to_string(bits);
  for (const Scalar* s : {&c->a1(), &c->a2(), &c->a3(), &c->a4(), &c->a6()}) key += "|" + s->to_string();
  Cache& cc = cache();
  {
    std::shared_lock lock(cc.mutex);
    auto it = cc.values.find(key);
    if (it != cc.values.end()) return it->second;
  }
  auto lat = compute_lattice(c, bits);
  std::unique_lock lock(cc.mutex);
  return cc.values.emplace(key, std::move(lat)).first->second;
}

WeierstrassValue weierstrass_p(const Complex& u, const Complex& tau) {
  Reduced r = reduce(tau);
  WeierstrassValue v = series(u / r.factor, r.tau);
  Complex f2 = r.factor * r.factor;
  v.p /= f2;
  v.dp /= f2 * r.factor;
  return v;
}

EllipticLog elliptic_log(const Point& p, const RealLattice& lat, int embedding) {
  unsigned bits = lat.precision();
  Real zero = Real::zero(bits);
  if (p.is_zero()) return {zero, zero, zero};

  const CurvePtr& c = p.curve();
  unsigned idx = embedding_index(c->field(), embedding);
  Scalar xs = p.x() + c->b2() / Scalar(12L);
  Scalar ys = p.y() + (c->a1() * p.x() + c->a3()) / Scalar(2L);
  Complex x = embed(xs, idx, bits + 16).with_precision(bits);
  Complex y = embed(ys, idx, bits + 16).with_precision(bits);
  Complex w1 = lat.omega1();
  Complex target = x * (w1 * w1);
  Complex dtarget = y * 2L * (w1 * w1 * w1);
  const Complex& tau = lat.tau;

  auto finish = [&](Complex u) {
    WeierstrassValue v = weierstrass_p(u, tau);
    if (norm(v.dp - dtarget) > norm(v.dp + dtarget)) u = -u;
    Real a = u.im / tau.im;
    Real b = u.re - a * tau.re;
    // Snap rounding noise so points on the real locus land exactly on a = 0.
    Real snap = numerics::ldexp_one(-static_cast<long>(bits) + 24, bits);
    for (Real* v : {&a, &b}) {
      *v -= numerics::floor(*v);
      if (*v < snap || Real(1L, bits) - *v < snap) *v = Real::zero(bits);
    }
    Real res = abs(v.p - target) / (lat.omega_real * lat.omega_real);
    return EllipticLog{a, b, res};
  };

  if (ys.is_zero()) {
    Complex half(Real(0.5, bits));
    std::vector<Complex> cands = {half, tau * Real(0.5, bits), tau * Real(0.5, bits) + half};
    Complex best = cands[0];
    Real bestd = abs(weierstrass_p(best, tau).p - target);
    for (auto& u : cands) {
      Real d = abs(weierstrass_p(u, tau).p - target);
      if (d < bestd) {
        bestd = d;
        best = u;
      }
    }
    return finish(best);
  }

  // Coarse grid, then Newton at low and at full precision.
  const unsigned lo = 64;
  Complex taul = tau.with_precision(lo), targl = target.with_precision(lo);
  Complex u;
  std::optional<Real> bestd;
  const int n = 16;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex cand = taul * Real((i + 0.5) / n, lo) + Complex(Real((j + 0.5) / n, lo));
      Real d = abs(weierstrass_p(cand, taul).p - targl);
      if (!bestd || d < *bestd) {
        bestd = d;
        u = cand;
      }
    }
  auto newton = [&](Complex& v, const Complex& t, const Complex& targ, unsigned prec, int steps) {
    Real tol = numerics::ldexp_one(-static_cast<long>(prec) + 6, prec);
    for (int s = 0; s < steps; ++s) {
      WeierstrassValue wv = weierstrass_p(v, t);
      Complex step = (wv.p - targ) / wv.dp;
      v -= step;
      if (abs(step) < tol) return true;
    }
    return false;
  };
  newton(u, taul, targl, lo, 60);
  u = u.with_precision(bits);
  newton(u, tau, target, bits, 40);
  EllipticLog out = finish(u);
  Real scale = numerics::max(abs(x), Real(1L, bits));
  if (out.residual > scale * numerics::ldexp_one(-static_cast<long>(bits) / 2, bits))
    throw ConvergenceError("elliptic_log: Newton iteration did not converge", out.residual);
  return out;
}

int deninger_constant(curves::Family family, const mpq_class& k) {
  if (family == curves::Family::n) {
    if (k > 3) return 1;
    if (k <= -1) return -2;
    throw std::domain_error("deninger_constant: family n needs k > 3 or k <= -1");
  }
  if (family == curves::Family::g) {
    if (k == 0) throw std::domain_error("deninger_constant: k = 0 is singular");
    return k > 0 ? 1 : -1;
  }
  throw std::invalid_argument("deninger_constant: not a family curve");
}

}  // namespace boyd14::uniformization
