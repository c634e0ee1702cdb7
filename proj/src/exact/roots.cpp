#include <cmath>
#include <complex>

#include "boyd14/exact/fpoly.hpp"
#include "boyd14/numerics/polyroots.hpp"

namespace boyd14::exact {

using numerics::Complex;
using numerics::Real;

namespace {

constexpr double kMaxCombinations = 4e6;

// Complex conjugation permutes the embeddings; partner[j] is the image of j.
std::vector<size_t> conjugate_partners(const std::vector<Complex>& e) {
  std::vector<size_t> partner(e.size());
  for (size_t j = 0; j < e.size(); ++j) {
    std::complex<double> c = std::conj(e[j].to_std());
    size_t best = 0;
    for (size_t k = 1; k < e.size(); ++k)
      if (std::abs(e[k].to_std() - c) < std::abs(e[best].to_std() - c)) best = k;
    partner[j] = best;
  }
  return partner;
}

// Inverse of a small square complex matrix by Gauss-Jordan with pivoting.
std::vector<std::vector<Complex>> invert(std::vector<std::vector<Complex>> a, unsigned bits) {
  const size_t n = a.size();
  std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n, Complex::zero(bits)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Complex(Real(1L, bits));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (numerics::abs(a[r][col]) > numerics::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Complex p = a[col][col];
    for (size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Complex m = a[r][col];
      if (m.is_zero()) continue;
      for (size_t k = 0; k < n; ++k) {
        a[r][k] -= m * a[col][k];
        inv[r][k] -= m * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

mpq_class rationalize(const Real& x, long tol_exp) {
  const unsigned bits = x.precision();
  Real tol = numerics::ldexp_one(tol_exp, bits);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real y = x;
  for (int it = 0; it < 4 * static_cast<int>(bits); ++it) {
    Real fl = numerics::floor(y);
    mpz_class a = fl.to_rational().get_num();
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpq_class r(p1, q1);
    r.canonicalize();
    if (numerics::abs(x - Real(r, bits)) < tol) return r;
    Real frac = y - fl;
    if (frac.is_zero()) return r;
    y = Real(1L, bits) / frac;
  }
  mpq_class r(p1, q1);
  r.canonicalize();
  return r;
}

FieldRoots roots_in_field(const FPoly& f, unsigned bits) {
  const FieldPtr& field = f.field();
  if (field->kind() == Field::Kind::rational_functions)
    throw std::domain_error("roots_in_field: not supported over " + field->name());
  FieldRoots out;
  out.cofactor = f;
  if (f.degree() <= 0) return out;

  FPoly g = f / gcd(f, f.derivative());
  const bool is_q = field->kind() == Field::Kind::rationals;
  const size_t d = is_q ? 1 : field->degree();
  const size_t n = static_cast<size_t>(g.degree());

  std::vector<Complex> emb = is_q ? std::vector<Complex>{Complex(Real(1L, bits))} : field->embeddings(bits);
  std::vector<size_t> partner = is_q ? std::vector<size_t>{0} : conjugate_partners(emb);

  std::vector<std::vector<Complex>> r(d);
  for (size_t j = 0; j < d; ++j) {
    std::vector<Complex> c;
    for (auto& s : g.coeffs()) c.push_back(is_q ? Complex(Real(s.to_rational(), bits)) : s.embed(static_cast<unsigned>(j), bits));
    r[j] = numerics::polyroots(c, bits);
  }

  std::vector<std::vector<Complex>> v(d, std::vector<Complex>(d));
  for (size_t j = 0; j < d; ++j) {
    Complex p(Real(1L, bits));
    for (size_t i = 0; i < d; ++i) {
      v[j][i] = p;
      p *= emb[j];
    }
  }
  auto vinv = invert(v, bits);
  std::vector<std::vector<std::complex<double>>> vinv_d(d, std::vector<std::complex<double>>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) vinv_d[i][j] = vinv[i][j].to_std();

  std::vector<size_t> free;
  for (size_t j = 0; j < d; ++j)
    if (j <= partner[j]) free.push_back(j);
  if (std::pow(static_cast<double>(n), static_cast<double>(free.size())) > kMaxCombinations)
    throw std::domain_error("roots_in_field: too many embedding combinations");

  std::vector<Scalar> found;
  std::vector<size_t> choice(free.size(), 0);
  const long tol_exp = -static_cast<long>(bits) * 9 / 20;
  for (bool more = n > 0; more && found.size() < n;) {
    std::vector<size_t> idx(d);
    for (size_t k = 0; k < free.size(); ++k) idx[free[k]] = choice[k];
    auto root_at = [&](size_t j) -> std::complex<double> {
      size_t src = j <= partner[j] ? j : partner[j];
      std::complex<double> z = r[src][idx[src]].to_std();
      return src == j ? z : std::conj(z);
    };
    double worst = 0, scale = 1;
    for (size_t i = 0; i < d; ++i) {
      std::complex<double> c = 0;
      for (size_t j = 0; j < d; ++j) c += vinv_d[i][j] * root_at(j);
      worst = std::max(worst, std::abs(c.imag()));
      scale = std::max(scale, std::abs(c));
    }
    if (worst <= 1e-6 * scale) {
      std::vector<mpq_class> coeff(d);
      for (size_t i = 0; i < d; ++i) {
        Complex c = Complex::zero(bits);
        for (size_t j = 0; j < d; ++j) {
          size_t src = j <= partner[j] ? j : partner[j];
          Complex z = r[src][idx[src]];
          c += vinv[i][j] * (src == j ? z : numerics::conj(z));
        }
        coeff[i] = rationalize(c.re, tol_exp);
      }
      Scalar cand = is_q ? Scalar(coeff[0]) : Scalar(field, QPoly(coeff));
      bool dup = false;
      for (auto& s : found) dup = dup || s == cand;
      if (!dup && g.eval(cand).is_zero()) found.push_back(cand);
    }
    // Odometer over the free embeddings.
    more = false;
    for (size_t k = 0; k < choice.size(); ++k) {
      if (++choice[k] < n) {
        more = true;
        break;
      }
      choice[k] = 0;
    }
  }

  FPoly rest = f;
  for (auto& s : found) {
    FPoly lin(field, {-s, Scalar(field, mpq_class(1))});
    int m = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
      ++m;
    }
    out.roots.push_back({s, m});
  }
  out.cofactor = rest;
  return out;
}

}  // namespace boyd14::exact
