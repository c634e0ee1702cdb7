#include "boyd14/modforms/lvalue.hpp"

#include <cmath>

namespace boyd14::modforms {

namespace {

double default_t0(long level, double t0) { return t0 > 0 ? t0 : 1 / std::sqrt(static_cast<double>(level)); }

// Lambda(s) from the first `terms` coefficients.
Real lambda(const std::vector<Real>& a, long level, int s, int eps, const Real& t0, int terms, unsigned bits) {
  Real A = numerics::sqrt(Real(level, bits));
  Real twopi = numerics::pi(bits) * 2L;
  Real sum = Real::zero(bits);
  for (int n = 1; n <= terms; ++n) {
    if (a[static_cast<size_t>(n)].is_zero()) continue;
    Real x = twopi * n / A;  // 2 pi n / A
    Real h = Real(1L, bits) / x;
    Real t = numerics::pow(h, s) * numerics::incomplete_gamma_upper(s, x * t0);
    t += numerics::pow(h, 2 - s) * numerics::incomplete_gamma_upper(2 - s, x / t0) * eps;
    sum += a[static_cast<size_t>(n)] * t;
  }
  return sum;
}

}  // namespace

int l_value_terms(long level, unsigned bits, double t0) {
  t0 = default_t0(level, t0);
  double m = std::min(t0, 1 / t0);
  double need = (bits * std::log(2.0) + 20) * std::sqrt(static_cast<double>(level)) / (2 * M_PI * m);
  return static_cast<int>(std::ceil(need)) + 1;
}

LValue l_value(const std::vector<mpq_class>& a_in, long level, int s, unsigned bits, const LOptions& opts) {
  if (s != 1 && s != 2) throw std::invalid_argument("l_value: s must be 1 or 2");
  const unsigned work = bits + 32;
  const double t0d = default_t0(level, opts.t0);
  const int k = l_value_terms(level, work, t0d);
  if (a_in.size() <= static_cast<size_t>(2 * k))
    throw TruncationError("l_value: need a(n) for n <= " + std::to_string(2 * k) + ", have " +
                          std::to_string(a_in.size() ? a_in.size() - 1 : 0));
  std::vector<Real> a;
  for (auto& c : a_in) a.emplace_back(c, work);
  Real t0(t0d, work);

  int eps = 0;
  if (opts.root_number) {
    eps = *opts.root_number;
    if (eps != 1 && eps != -1) throw std::invalid_argument("l_value: root number must be +-1");
  } else {
    // Only the true sign makes Lambda independent of the split point.
    Real t1 = t0 * Real(1.25, work);
    const int k1 = l_value_terms(level, work, t0d * 1.25);
    if (a_in.size() <= static_cast<size_t>(k1)) throw TruncationError("l_value: too few coefficients to detect the root number");
    Real best;
    for (int e : {1, -1}) {
      Real gap = numerics::abs(lambda(a, level, 1, e, t0, k, work) - lambda(a, level, 1, e, t1, k1, work));
      if (eps == 0 || gap < best) {
        best = gap;
        eps = e;
      }
    }
  }

  Real short_sum = lambda(a, level, s, eps, t0, k, work);
  Real full = lambda(a, level, s, eps, t0, 2 * k, work);
  // L(s) = Lambda(s) (2 pi / A)^s / Gamma(s); Gamma(1) = Gamma(2) = 1.
  Real scale = numerics::pow(numerics::pi(work) * 2L / numerics::sqrt(Real(level, work)), s);
  Real value = full * scale;
  Real err = numerics::abs(full - short_sum) * scale + numerics::ldexp_one(8 - static_cast<long>(bits), work);
  if (err > numerics::ldexp_one(9 - static_cast<long>(bits), work) * numerics::max(numerics::abs(value), Real(1L, work)))
    throw TruncationError("l_value: truncations disagree by " + err.to_string(4));
  return {value.with_precision(bits), err.with_precision(bits), eps, 2 * k};
}

}  // namespace boyd14::modforms
