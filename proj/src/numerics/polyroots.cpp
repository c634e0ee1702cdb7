#include "boyd14/numerics/polyroots.hpp"

#include <cmath>
#include <complex>

namespace boyd14::numerics {

namespace {

using cd = std::complex<double>;

std::vector<cd> aberth_double(const std::vector<cd>& c) {
  const size_t n = c.size() - 1;
  double radius = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = std::pow(std::abs(c[i] / c[n]), 1.0 / static_cast<double>(n - i));
    radius = std::max(radius, r);
  }
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
  std::vector<cd> z(n);
  for (size_t k = 0; k < n; ++k) z[k] = std::polar(radius, 2 * M_PI * k / n + 0.4);
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (size_t k = 0; k < n; ++k) {
      cd p = c[n], dp = 0;
      for (size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p == cd(0)) continue;
      cd w = p / dp;
      cd s = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      cd step = w / (1.0 - w * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = w;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

}  // namespace

Complex polyval(const std::vector<Complex>& coeffs, const Complex& z) {
  Complex acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

std::vector<Complex> polyroots(const std::vector<Complex>& coeffs_in, unsigned bits) {
  std::vector<Complex> c;
  c.reserve(coeffs_in.size());
  for (const auto& x : coeffs_in) c.push_back(x.with_precision(bits));
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) throw RootFindingError("polyroots: zero polynomial");
  std::vector<Complex> roots;
  size_t zeros = 0;
  while (zeros < c.size() && c[zeros].is_zero()) ++zeros;
  for (size_t i = 0; i < zeros; ++i) roots.push_back(Complex::zero(bits));
  c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  const size_t n = c.size() - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  std::vector<cd> cdbl(n + 1);
  for (size_t i = 0; i <= n; ++i) cdbl[i] = c[i].to_std();
  std::vector<cd> guess = aberth_double(cdbl);
  std::vector<Complex> z;
  for (const auto& g : guess) z.push_back(Complex::from(g, bits));

  Real tol = ldexp_one(-static_cast<long>(bits) + 6, bits);
  const int max_iter = 8 * static_cast<int>(bits) + 50;
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    converged = true;
    for (size_t k = 0; k < n; ++k) {
      Complex p = c[n];
      Complex dp = Complex::zero(bits);
      for (size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p.is_zero()) continue;
      Complex w = p / dp;
      Complex s = Complex::zero(bits);
      for (size_t j = 0; j < n; ++j)
        if (j != k) s += 1L / (z[k] - z[j]);
      Complex denom = 1L - w * s;
      Complex step = denom.is_zero() ? w : w / denom;
      if (!step.re.is_finite() || !step.im.is_finite()) step = w;
      z[k] -= step;
      if (!z[k].re.is_finite() || !z[k].im.is_finite())
        throw RootFindingError("polyroots: iteration diverged");
      Real scale = max(abs(z[k]), Real(1L, bits));
      if (abs(step) > tol * scale) converged = false;
    }
  }
  if (!converged) {
    // Clustered roots converge slowly; accept if the residual is small.
    for (const auto& r : z) {
      Real mag = Real::zero(bits);
      Real ar = abs(r);
      Real pw(1L, bits);
      for (const auto& ci : c) {
        mag += abs(ci) * pw;
        pw *= ar;
      }
      Real limit = ldexp_one(-static_cast<long>(bits) / 2, bits) * mag;
      if (abs(polyval(c, r)) > limit) throw RootFindingError("polyroots: no convergence");
    }
  }
  for (auto& r : z) roots.push_back(std::move(r));
  return roots;
}

std::vector<Complex> polyroots(const std::vector<Real>& coeffs, unsigned bits) {
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(x);
  return polyroots(c, bits);
}

}  // namespace boyd14::numerics
