#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boyd14/exact/qpoly.hpp"

namespace boyd14::exact {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Q, Q(t), or Q[t]/(m). Descriptors are interned: two requests for the same
// field return the same pointer, so identity comparison is equality.
class Field {
 public:
  enum class Kind { rationals, rational_functions, quotient };

  static FieldPtr rationals();
  static FieldPtr rational_functions(std::string var = "k");
  // m must be irreducible; this is not checked beyond squarefreeness.
  static FieldPtr quotient(const QPoly& m, std::string var = "t");
  // Q(zeta_n) with generator named `var`; n in {3, 7} are the ones used here.
  static FieldPtr cyclotomic(unsigned n, std::string var = "g");

  Kind kind() const { return kind_; }
  const std::string& var() const { return var_; }
  const QPoly& modulus() const { return modulus_; }
  unsigned cyclotomic_order() const { return cyclotomic_order_; }
  // Degree over Q; 0 for Q(t).
  unsigned degree() const;
  // "Q", "Q(k)", "Q(zeta7)" or "Q[t]/(...)".
  std::string name() const;

  // Roots of m sorted by principal argument, computed once per precision.
  const std::vector<numerics::Complex>& embeddings(unsigned bits) const;
  // Index of the root exp(2 pi i / n) in the sorted order (cyclotomic only).
  unsigned principal_embedding() const;

  Field(Kind kind, std::string var, QPoly modulus, unsigned cyclotomic_order);

 private:
  Kind kind_;
  std::string var_;
  QPoly modulus_;
  unsigned cyclotomic_order_;
  mutable std::mutex embed_mutex_;
  mutable std::vector<std::pair<unsigned, std::shared_ptr<const std::vector<numerics::Complex>>>> embed_cache_;
};

// Parses "Q", "Q(k)", "Q(a)", "Q(zeta7)", "Q(zeta3)".
FieldPtr parse_field(std::string_view text);

// Element of a Field in canonical form: num/den with gcd 1 and monic den for
// Q(t); den = 1 and deg num < deg m for quotients; constants for Q.
class Scalar {
 public:
  Scalar();  // zero in Q
  Scalar(long n);  // NOLINT: integers are rationals
  Scalar(const mpq_class& q);  // NOLINT
  Scalar(FieldPtr field, const mpq_class& q);
  Scalar(FieldPtr field, QPoly num, QPoly den = QPoly(1L));
  static Scalar generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == QPoly(1L) && den_ == QPoly(1L); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  // Throws std::domain_error unless is_rational().
  mpq_class to_rational() const;
  // Same value viewed in `f` (only Q promotes, everything else must match).
  Scalar in(const FieldPtr& f) const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;

  // sigma_e(g) = g^e on a cyclotomic field; identity on Q.
  Scalar galois(long e) const;
  // Sum over all automorphisms; lands in Q.
  Scalar trace() const;
  // Rational-function field only: evaluate at t = q.
  Scalar at(const mpq_class& q) const;
  // Replace the generator by a value in another field (Q(t) or quotient).
  Scalar substitute(const Scalar& value) const;

  // Quotient fields only, or rational values.
  numerics::Complex embed(unsigned index, unsigned bits) const;
  // Q(t): evaluate numerically at a complex t.
  numerics::Complex eval(const numerics::Complex& t) const;

  std::string to_string() const;
  size_t hash() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void normalize();
  FieldPtr field_;
  QPoly num_;
  QPoly den_;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);
Scalar pow(const Scalar& a, long n);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Common field of two scalars, promoting Q; throws FieldMismatch otherwise.
FieldPtr join(const FieldPtr& a, const FieldPtr& b);

// Parses text such as "1+2*g+2*g^2+2*g^4" or "(k^2-4)/(k-2)" in `field`.
Scalar parse_scalar(std::string_view text, const FieldPtr& field);

struct Cyclotomic7 {
  Scalar gamma;    // primitive 7th root of unity
  Scalar xi;       // gamma + gamma^-1 + 1, root of t^3 - 2t^2 - t + 1
  Scalar sqrt_m7;  // 1 + 2(gamma + gamma^2 + gamma^4), squares to -7
};
const Cyclotomic7& cyclotomic7_constants();

}  // namespace boyd14::exact
