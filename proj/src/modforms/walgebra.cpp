#include "boyd14/modforms/walgebra.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace boyd14::modforms {

WElem::WElem(long level) : n_(level) {
  if (level < 1) throw std::invalid_argument("WElem: level must be positive");
  for (long p = 2; p * p <= level; ++p)
    if (level % (p * p) == 0) throw std::invalid_argument("WElem: level must be squarefree");
}

WElem WElem::w(long level, long m, const mpq_class& c) {
  WElem r(level);
  r.add(m, c);
  return r;
}

void WElem::add(long m, const mpq_class& c) {
  if (m < 1 || n_ % m) throw std::invalid_argument("WElem: " + std::to_string(m) + " does not divide " + std::to_string(n_));
  if (c == 0) return;
  mpq_class& v = c_[m];
  v += c;
  if (v == 0) c_.erase(m);
}

mpq_class WElem::operator[](long m) const {
  auto it = c_.find(m);
  return it == c_.end() ? mpq_class(0) : it->second;
}

std::vector<long> WElem::primes() const {
  std::vector<long> ps;
  long n = n_;
  for (long p = 2; p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      n /= p;
    }
  return ps;
}

WElem& WElem::operator+=(const WElem& b) {
  if (b.n_ != n_) throw std::invalid_argument("WElem: level mismatch");
  for (auto& [m, c] : b.c_) add(m, c);
  return *this;
}

WElem& WElem::operator-=(const WElem& b) { return *this += b * mpq_class(-1); }

WElem operator*(const WElem& a, const WElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("WElem: level mismatch");
  WElem r(a.n_);
  for (auto& [m, x] : a.c_)
    for (auto& [k, y] : b.c_) {
      long g = std::gcd(m, k);
      r.add(m / g * (k / g), x * y);
    }
  return r;
}

WElem operator*(WElem a, const mpq_class& c) {
  if (c == 0) return WElem(a.n_);
  for (auto& [m, x] : a.c_) x *= c;
  return a;
}

WElem WElem::gamma_star(const std::map<long, int>& signs) const {
  WElem r(n_);
  for (auto& [m, c] : c_) {
    int g = 1;
    for (long p : primes())
      if (m % p == 0) g *= signs.at(p);
    r.add(m, c * g);
  }
  return r;
}

std::string WElem::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : c_) {
    mpq_class a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (m == 1) os << a.get_str();
    else if (a == 1) os << "w" << m;
    else os << a.get_str() << "*w" << m;
  }
  return os.str();
}

WElem d_element(long level) {
  WElem d = WElem::identity(level);
  for (long p : d.primes()) d = d * (WElem::identity(level) + WElem::w(level, p, p));
  return d;
}

WElem d_inverse(long level) {
  WElem d = WElem::identity(level);
  for (long p : d.primes())
    d = d * (WElem::identity(level) - WElem::w(level, p, p)) * (mpq_class(1) / (1 - p * p));
  return d;
}

std::map<long, int> atkin_lehner_signs(long level, const std::vector<mpq_class>& a) {
  std::map<long, int> s;
  for (long p : WElem(level).primes()) {
    if (static_cast<size_t>(p) >= a.size()) throw std::invalid_argument("atkin_lehner_signs: a(" + std::to_string(p) + ") missing");
    mpq_class g = -a[static_cast<size_t>(p)];
    if (g != 1 && g != -1) throw std::invalid_argument("atkin_lehner_signs: a(p) must be +-1 for p | N");
    s[p] = g > 0 ? 1 : -1;
  }
  return s;
}

mpq_class beilinson_coefficient(long level, const WElem& alpha, const WElem& beta, const std::map<long, int>& signs) {
  WElem di = d_inverse(level);
  return (WElem::w(level, level) * (di * alpha) * (di * beta).gamma_star(signs)).epsilon();
}

WElem cusp_divisor(long level, const std::map<long, mpq_class>& e2_coeffs) {
  WElem e(level);
  for (auto& [m, c] : e2_coeffs) e += WElem::w(level, m, c / m);
  return d_element(level) * e;
}

}  // namespace boyd14::modforms
