#include "boyd14/exact/qpoly.hpp"

#include <stdexcept>

namespace boyd14::exact {

QPoly::QPoly(const mpq_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly QPoly::monomial(unsigned degree, const mpq_class& c) {
  if (c == 0) return {};
  std::vector<mpq_class> v(degree + 1, mpq_class(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), mpq_class(0));
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), mpq_class(0));
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& b) {
  *this = *this * b;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.coeffs().size() + b.coeffs().size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r = *this;
  mpq_class l = lead();
  for (auto& c : r.c_) c /= l;
  return r;
}

QPoly QPoly::inflate(unsigned e) const {
  if (is_zero()) return {};
  std::vector<mpq_class> r(static_cast<size_t>(degree()) * e + 1, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
  return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

numerics::Complex QPoly::eval(const numerics::Complex& x) const {
  const unsigned bits = x.precision();
  numerics::Complex acc = numerics::Complex::zero(bits);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + numerics::Real(c_[i], bits);
  return acc;
}

std::string QPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<mpq_class> rem = a.coeffs();
  std::vector<mpq_class> quo(static_cast<size_t>(a.degree() - b.degree() + 1), mpq_class(0));
  const mpq_class lb = b.lead();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class q = rem[static_cast<size_t>(k + db)] / lb;
    quo[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(1L), s1, t0, t1(1L);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class l = r0.lead();
  QPoly inv(mpq_class(1) / l);
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace boyd14::exact
