#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace boyd14::modforms {

// Element of Q[W], W the Atkin-Lehner group of a squarefree level N. The
// basis element w_m is indexed by m | N.
class WElem {
 public:
  explicit WElem(long level);
  static WElem identity(long level) { return w(level, 1); }
  static WElem w(long level, long m, const mpq_class& c = 1);

  long level() const { return n_; }
  const std::map<long, mpq_class>& coeffs() const { return c_; }
  mpq_class operator[](long m) const;
  std::vector<long> primes() const;

  WElem& operator+=(const WElem& b);
  WElem& operator-=(const WElem& b);
  friend WElem operator+(WElem a, const WElem& b) { return a += b; }
  friend WElem operator-(WElem a, const WElem& b) { return a -= b; }
  friend WElem operator*(const WElem& a, const WElem& b);
  friend WElem operator*(WElem a, const mpq_class& c);
  friend WElem operator*(const mpq_class& c, WElem a) { return a * c; }
  friend bool operator==(const WElem& a, const WElem& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  // Coefficient of the identity.
  mpq_class epsilon() const { return (*this)[1]; }
  // w -> gamma(w) w, where gamma(w_p) = signs.at(p) and gamma is a character.
  WElem gamma_star(const std::map<long, int>& signs) const;

  std::string to_string() const;

 private:
  void add(long m, const mpq_class& c);
  long n_;
  std::map<long, mpq_class> c_;
};

// d = sum m w_m = prod (1 + p w_p).
WElem d_element(long level);
// prod (1 - p w_p) / (1 - p^2).
WElem d_inverse(long level);

// gamma(w_p) = -a(p) for the primes p | N.
std::map<long, int> atkin_lehner_signs(long level, const std::vector<mpq_class>& a);

// eps(w_N alpha' gamma*(beta')) with alpha' = d^-1 alpha, beta' = d^-1 beta.
mpq_class beilinson_coefficient(long level, const WElem& alpha, const WElem& beta, const std::map<long, int>& signs);

// Cusp divisor of a modular unit F with theta(F)/F = sum c_m E2(m tau):
// (F) = d (sum c_m / m w_m) [0], read as an element of Q[W].
WElem cusp_divisor(long level, const std::map<long, mpq_class>& e2_coeffs);

}  // namespace boyd14::modforms
