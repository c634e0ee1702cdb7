#include "boyd14/exact/fpoly.hpp"

namespace boyd14::exact {

namespace {

FPoly lift(const FPoly& p, const FieldPtr& f) {
  if (p.field() == f) return p;
  std::vector<Scalar> c;
  for (auto& s : p.coeffs()) c.push_back(s.in(f));
  return FPoly(f, std::move(c));
}

}  // namespace

FPoly::FPoly(FieldPtr field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.in(field_);
  trim();
}

FPoly::FPoly(const Scalar& constant) : field_(constant.field()) {
  if (!constant.is_zero()) c_.push_back(constant);
}

FPoly FPoly::x(FieldPtr field) { return monomial(std::move(field), 1, Scalar(1L)); }

FPoly FPoly::monomial(FieldPtr field, unsigned degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1, Scalar(field, mpq_class(0)));
  v[degree] = c.in(field);
  return FPoly(std::move(field), std::move(v));
}

void FPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FPoly& FPoly::operator+=(const FPoly& b) {
  field_ = join(field_, b.field_);
  *this = lift(*this, field_);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Scalar(field_, mpq_class(0)));
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

FPoly& FPoly::operator-=(const FPoly& b) { return *this += -b; }

FPoly& FPoly::operator*=(const FPoly& b) {
  *this = *this * b;
  return *this;
}

FPoly FPoly::operator-() const {
  FPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FPoly operator+(FPoly a, const FPoly& b) { return a += b; }
FPoly operator-(FPoly a, const FPoly& b) { return a -= b; }

FPoly operator*(const FPoly& a, const FPoly& b) {
  FieldPtr f = join(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return FPoly(f);
  std::vector<Scalar> r(a.coeffs().size() + b.coeffs().size() - 1, Scalar(f, mpq_class(0)));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return FPoly(f, std::move(r));
}

FPoly pow(const FPoly& a, unsigned n) {
  FPoly r(Scalar(a.field(), mpq_class(1)));
  for (unsigned i = 0; i < n; ++i) r *= a;
  return r;
}

FPoly FPoly::derivative() const {
  std::vector<Scalar> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return FPoly(field_, std::move(r));
}

FPoly FPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  FPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Scalar FPoly::eval(const Scalar& x) const {
  Scalar acc(join(field_, x.field()), mpq_class(0));
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::vector<numerics::Complex> FPoly::embed(unsigned index, unsigned bits) const {
  std::vector<numerics::Complex> r;
  for (auto& c : c_) r.push_back(c.embed(index, bits));
  return r;
}

std::string FPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[i].to_string();
    if (i == 0) {
      out += "(" + c + ")";
      continue;
    }
    if (!c_[i].is_one()) out += "(" + c + ")*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool operator==(const FPoly& a, const FPoly& b) {
  if (a.coeffs().size() != b.coeffs().size()) return false;
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] != b.coeffs()[i]) return false;
  return true;
}

std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) {
  if (b.is_zero()) throw DivisionByZero("FPoly: division by zero polynomial");
  FieldPtr f = join(a.field(), b.field());
  if (a.degree() < b.degree()) return {FPoly(f), lift(a, f)};
  std::vector<Scalar> rem = lift(a, f).coeffs();
  std::vector<Scalar> quo(static_cast<size_t>(a.degree() - b.degree() + 1), Scalar(f, mpq_class(0)));
  const Scalar inv = b.lead().inverse();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Scalar q = rem[static_cast<size_t>(k + db)] * inv;
    quo[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db), Scalar(f, mpq_class(0)));
  return {FPoly(f, std::move(quo)), FPoly(f, std::move(rem))};
}

FPoly operator/(const FPoly& a, const FPoly& b) { return divmod(a, b).first; }
FPoly operator%(const FPoly& a, const FPoly& b) { return divmod(a, b).second; }

FPoly gcd(FPoly a, FPoly b) {
  while (!b.is_zero()) {
    FPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FRat::FRat(FPoly num) : num_(std::move(num)), den_(Scalar(num_.field(), mpq_class(1))) {}

FRat::FRat(FPoly num, FPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void FRat::normalize() {
  if (den_.is_zero()) throw DivisionByZero("FRat: zero denominator");
  FieldPtr f = join(num_.field(), den_.field());
  num_ = lift(num_, f);
  den_ = lift(den_, f);
  if (num_.is_zero()) {
    den_ = FPoly(Scalar(f, mpq_class(1)));
    return;
  }
  FPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FPoly inv(den_.lead().inverse());
  num_ *= inv;
  den_ *= inv;
}

FRat& FRat::operator+=(const FRat& b) {
  *this = FRat(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
  return *this;
}

FRat& FRat::operator-=(const FRat& b) {
  *this = FRat(num_ * b.den_ - b.num_ * den_, den_ * b.den_);
  return *this;
}

FRat& FRat::operator*=(const FRat& b) {
  *this = FRat(num_ * b.num_, den_ * b.den_);
  return *this;
}

FRat& FRat::operator/=(const FRat& b) {
  if (b.is_zero()) throw DivisionByZero("FRat: division by zero");
  *this = FRat(num_ * b.den_, den_ * b.num_);
  return *this;
}

FRat FRat::operator-() const { return FRat(-num_, den_); }

Scalar FRat::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("FRat: pole");
  return num_.eval(x) / d;
}

FRat operator+(FRat a, const FRat& b) { return a += b; }
FRat operator-(FRat a, const FRat& b) { return a -= b; }
FRat operator*(FRat a, const FRat& b) { return a *= b; }
FRat operator/(FRat a, const FRat& b) { return a /= b; }

}  // namespace boyd14::exact
