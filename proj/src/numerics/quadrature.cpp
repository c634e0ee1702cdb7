#include "boyd14/numerics/quadrature.hpp"

#include <map>
#include <mutex>

namespace boyd14::numerics {

namespace {

std::mutex gl_mutex;
std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GaussLegendre>> gl_cache;

std::shared_ptr<const GaussLegendre> build_rule(unsigned n, unsigned bits) {
  auto rule = std::make_shared<GaussLegendre>();
  const unsigned work = bits + 16;
  Real eps = ldexp_one(-static_cast<long>(work) + 4, work);
  for (unsigned i = 1; i <= n; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)), work);
    Real dp = Real::zero(work);
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_n(x) and its derivative.
      Real p0(1L, work), p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        Real p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = (p0 - x * p1) * static_cast<long>(n) / (1L - sqr(x));
      Real step = p1 / dp;
      x -= step;
      if (abs(step) < eps) break;
    }
    rule->nodes.push_back(x.with_precision(bits));
    rule->weights.push_back((Real(2L, work) / ((1L - sqr(x)) * sqr(dp))).with_precision(bits));
  }
  return rule;
}

Real apply_rule(const GaussLegendre& rule, const std::function<Real(const Real&)>& f, const Real& a,
                const Real& b) {
  Real mid = (a + b) / 2L;
  Real half = (b - a) / 2L;
  Real sum = Real::zero(mid.precision());
  for (size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

void adapt(const GaussLegendre& rule, const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
           const Real& whole, const Real& coarse, const Real& tol, unsigned depth, const QuadratureOptions& opts,
           Real& total, Real& error) {
  Real mid = (a + b) / 2L;
  Real left = apply_rule(rule, f, a, mid);
  Real right = apply_rule(rule, f, mid, b);
  Real fine = left + right;
  Real diff = abs(fine - coarse);
  Real share = tol * (b - a) / whole;
  if (diff <= share || depth >= opts.max_depth) {
    total += fine;
    error += diff;
    return;
  }
  adapt(rule, f, a, mid, whole, left, tol, depth + 1, opts, total, error);
  adapt(rule, f, mid, b, whole, right, tol, depth + 1, opts, total, error);
}

}  // namespace

std::shared_ptr<const GaussLegendre> gauss_legendre(unsigned n, unsigned bits) {
  std::lock_guard lock(gl_mutex);
  auto key = std::make_pair(n, bits);
  auto it = gl_cache.find(key);
  if (it != gl_cache.end()) return it->second;
  auto rule = build_rule(n, bits);
  gl_cache.emplace(key, rule);
  return rule;
}

Estimate integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, const Real& tol,
                   const QuadratureOptions& opts) {
  return integrate_panels(f, {a, b}, tol, opts);
}

Estimate integrate_panels(const std::function<Real(const Real&)>& f, const std::vector<Real>& breaks,
                          const Real& tol, const QuadratureOptions& opts) {
  auto rule = gauss_legendre(opts.order, opts.bits);
  Real total = Real::zero(opts.bits);
  Real error = Real::zero(opts.bits);
  if (breaks.size() < 2) return {total, error};
  Real whole = abs(breaks.back() - breaks.front());
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Real& a = breaks[i];
    const Real& b = breaks[i + 1];
    if (!(a < b)) continue;
    Real coarse = apply_rule(*rule, f, a, b);
    adapt(*rule, f, a, b, whole, coarse, tol, 0, opts, total, error);
  }
  return {total, error};
}

}  // namespace boyd14::numerics
