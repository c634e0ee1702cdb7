#include <functional>
#include <numeric>
#include <ostream>

#include "boyd14/exact/field.hpp"

namespace boyd14::exact {

using numerics::Complex;
using numerics::Real;

Scalar::Scalar() : field_(Field::rationals()), den_(1L) {}
Scalar::Scalar(long n) : Scalar(mpq_class(n)) {}
Scalar::Scalar(const mpq_class& q) : field_(Field::rationals()), num_(q), den_(1L) {}
Scalar::Scalar(FieldPtr field, const mpq_class& q) : field_(std::move(field)), num_(q), den_(1L) {}

Scalar::Scalar(FieldPtr field, QPoly num, QPoly den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Scalar Scalar::generator(FieldPtr field) {
  if (field->kind() == Field::Kind::rationals) throw std::domain_error("Q has no generator");
  return Scalar(std::move(field), QPoly::x());
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero("division by zero in " + field_->name());
  switch (field_->kind()) {
    case Field::Kind::rationals: {
      if (!num_.is_constant() || !den_.is_constant())
        throw std::invalid_argument("non-constant polynomial in Q");
      num_ = QPoly(mpq_class(num_[0] / den_[0]));
      den_ = QPoly(1L);
      return;
    }
    case Field::Kind::rational_functions: {
      if (num_.is_zero()) {
        den_ = QPoly(1L);
        return;
      }
      QPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
      QPoly inv(mpq_class(1 / den_.lead()));
      num_ *= inv;
      den_ *= inv;
      return;
    }
    case Field::Kind::quotient: {
      const QPoly& m = field_->modulus();
      if (!(den_ == QPoly(1L))) {
        auto [g, s, t] = xgcd(den_ % m, m);
        if (g.degree() != 0) throw DivisionByZero("division by zero in " + field_->name());
        num_ = num_ * s;
        den_ = QPoly(1L);
      }
      num_ = num_ % m;
      return;
    }
  }
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("not a rational: " + to_string());
  return num_[0] / den_[0];
}

Scalar Scalar::in(const FieldPtr& f) const {
  if (f == field_) return *this;
  if (field_->kind() == Field::Kind::rationals) return Scalar(f, num_, den_);
  throw FieldMismatch("cannot view " + field_->name() + " element in " + f->name());
}

Scalar& Scalar::operator+=(const Scalar& b) {
  FieldPtr f = join(field_, b.field_);
  *this = Scalar(f, num_ * b.den_ + b.num_ * den_, den_ * b.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  FieldPtr f = join(field_, b.field_);
  *this = Scalar(f, num_ * b.den_ - b.num_ * den_, den_ * b.den_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  FieldPtr f = join(field_, b.field_);
  *this = Scalar(f, num_ * b.num_, den_ * b.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  FieldPtr f = join(field_, b.field_);
  *this = Scalar(f, num_ * b.den_, den_ * b.num_);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Scalar(field_, den_, num_);
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

Scalar pow(const Scalar& a, long n) {
  if (n < 0) return pow(a.inverse(), -n);
  Scalar result(a.field(), mpq_class(1));
  Scalar base = a;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  join(a.field_, b.field_);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

Scalar Scalar::galois(long e) const {
  if (field_->kind() == Field::Kind::rationals) return *this;
  const unsigned n = field_->cyclotomic_order();
  if (!n) throw std::domain_error("galois action needs a cyclotomic field");
  long r = ((e % static_cast<long>(n)) + n) % n;
  if (std::gcd(r, static_cast<long>(n)) != 1)
    throw std::invalid_argument("galois exponent " + std::to_string(e) + " not coprime to " + std::to_string(n));
  return Scalar(field_, num_.inflate(static_cast<unsigned>(r)));
}

Scalar Scalar::trace() const {
  switch (field_->kind()) {
    case Field::Kind::rationals:
      return *this;
    case Field::Kind::rational_functions:
      throw std::domain_error("trace undefined on Q(t)");
    case Field::Kind::quotient:
      break;
  }
  // Trace of multiplication by this element in the power basis.
  const QPoly& m = field_->modulus();
  mpq_class t = 0;
  QPoly basis(1L);
  for (int i = 0; i < m.degree(); ++i) {
    t += ((num_ * basis) % m)[static_cast<size_t>(i)];
    basis = basis * QPoly::x();
  }
  return Scalar(t);
}

Scalar Scalar::at(const mpq_class& q) const {
  if (field_->kind() == Field::Kind::rationals) return *this;
  if (field_->kind() != Field::Kind::rational_functions) throw std::domain_error("at(): not a rational-function field");
  mpq_class d = den_.eval(q);
  if (d == 0) throw DivisionByZero("pole at " + q.get_str());
  return Scalar(mpq_class(num_.eval(q) / d));
}

Scalar Scalar::substitute(const Scalar& value) const {
  if (field_->kind() == Field::Kind::rationals) return in(value.field());
  auto horner = [&](const QPoly& p) {
    Scalar acc(value.field(), mpq_class(0));
    for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * value + Scalar(p.coeffs()[i]);
    return acc;
  };
  return horner(num_) / horner(den_);
}

Complex Scalar::embed(unsigned index, unsigned bits) const {
  if (is_rational()) return Complex(Real(to_rational(), bits));
  if (field_->kind() != Field::Kind::quotient) throw std::domain_error("embed(): not a number field");
  const auto& roots = field_->embeddings(bits + 16);
  if (index >= roots.size()) throw std::out_of_range("embedding index out of range");
  return num_.eval(roots[index]).with_precision(bits);
}

Complex Scalar::eval(const Complex& t) const {
  if (is_rational()) return Complex(Real(to_rational(), t.precision()));
  if (field_->kind() != Field::Kind::rational_functions) throw std::domain_error("eval(): not a rational-function field");
  return num_.eval(t) / den_.eval(t);
}

std::string Scalar::to_string() const {
  if (field_->kind() == Field::Kind::rationals) return num_[0].get_str();
  const std::string& v = field_->var();
  std::string n = num_.to_string(v);
  if (den_ == QPoly(1L)) return n;
  auto wrap = [](const QPoly& p, std::string s) {
    size_t terms = 0;
    for (auto& c : p.coeffs()) terms += c != 0;
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_, n) + "/" + wrap(den_, den_.to_string(v));
}

size_t Scalar::hash() const { return std::hash<std::string>{}(to_string()); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

const Cyclotomic7& cyclotomic7_constants() {
  static const Cyclotomic7 c = [] {
    FieldPtr f = Field::cyclotomic(7, "g");
    Scalar g = Scalar::generator(f);
    Scalar xi = g + g.inverse() + Scalar(1L);
    Scalar s = Scalar(1L) + Scalar(2L) * (g + pow(g, 2) + pow(g, 4));
    return Cyclotomic7{g, xi, s};
  }();
  return c;
}

}  // namespace boyd14::exact
