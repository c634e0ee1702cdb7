#include "boyd14/divisors/divisor.hpp"

#include <algorithm>
#include <vector>

namespace boyd14::divisors {

using curves::Curve;
using curves::Family;
using curves::Scalar;

namespace {

void accumulate(std::map<std::string, Term>& terms, const Point& p, long c) {
  if (c == 0) return;
  std::string key = p.to_string();
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, Term{p, c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms.erase(it);
}

void require_same(const CurvePtr& a, const CurvePtr& b) {
  if (!(*a == *b)) throw std::invalid_argument("divisors on different curves");
}

}  // namespace

FormalSum::FormalSum(CurvePtr curve, std::initializer_list<std::pair<long, Point>> terms) : curve_(std::move(curve)) {
  for (auto& [c, p] : terms) add(p, c);
}

void FormalSum::add(const Point& p, long c) { accumulate(terms_, p, c); }

long FormalSum::degree() const {
  long d = 0;
  for (auto& [k, t] : terms_) d += t.coeff;
  return d;
}

Point FormalSum::evaluate() const {
  Point acc = curve_->zero();
  for (auto& [k, t] : terms_) acc += t.point.times(t.coeff);
  return acc;
}

FormalSum& FormalSum::operator+=(const FormalSum& b) {
  require_same(curve_, b.curve_);
  for (auto& [k, t] : b.terms_) add(t.point, t.coeff);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& b) {
  require_same(curve_, b.curve_);
  for (auto& [k, t] : b.terms_) add(t.point, -t.coeff);
  return *this;
}

FormalSum FormalSum::operator*(long c) const {
  FormalSum r(curve_);
  for (auto& [k, t] : terms_) r.add(t.point, t.coeff * c);
  return r;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto& [k, t] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

FormalSum antipode(const FormalSum& a) {
  FormalSum r(a.curve());
  for (auto& [k, t] : a.terms()) r.add(-t.point, t.coeff);
  return r;
}

FormalSum convolve(const FormalSum& a, const FormalSum& b) {
  require_same(a.curve(), b.curve());
  FormalSum r(a.curve());
  for (auto& [ka, ta] : a.terms())
    for (auto& [kb, tb] : b.terms()) r.add(ta.point + tb.point, ta.coeff * tb.coeff);
  return r;
}

void Divisor::add_class(const Point& p, long c) {
  if (p.is_zero() || c == 0) return;
  Point n = -p;
  if (n == p) {
    // 2[T] = [T] + [-T] = 0 for T of order 2.
    std::string key = p.to_string();
    long odd = ((c % 2) + 2) % 2;
    auto it = terms_.find(key);
    long cur = it == terms_.end() ? 0 : it->second.coeff;
    long next = (cur + odd) % 2;
    if (next == 0) {
      if (it != terms_.end()) terms_.erase(it);
    } else {
      terms_[key] = Term{p, 1};
    }
    return;
  }
  std::string sp = p.to_string(), sn = n.to_string();
  if (sp <= sn) accumulate(terms_, p, c);
  else accumulate(terms_, n, -c);
}

long Divisor::coeff(const Point& p) const {
  if (p.is_zero()) return 0;
  auto it = terms_.find(p.to_string());
  if (it != terms_.end()) return it->second.coeff;
  Point n = -p;
  it = terms_.find(n.to_string());
  if (it != terms_.end()) return n == p ? it->second.coeff : -it->second.coeff;
  return 0;
}

Divisor& Divisor::operator+=(const Divisor& b) {
  require_same(curve_, b.curve_);
  for (auto& [k, t] : b.terms_) add_class(t.point, t.coeff);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& b) {
  require_same(curve_, b.curve_);
  for (auto& [k, t] : b.terms_) add_class(t.point, -t.coeff);
  return *this;
}

Divisor Divisor::operator*(long c) const {
  Divisor r(curve_);
  for (auto& [k, t] : terms_) r.add_class(t.point, t.coeff * c);
  return r;
}

bool operator==(const Divisor& a, const Divisor& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto& [k, t] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

std::string Divisor::to_string(const curves::Subgroup* labels) const {
  if (terms_.empty()) return "0";
  struct Shown {
    std::string label;
    long coeff;
  };
  std::vector<Shown> shown;
  for (auto& [k, t] : terms_) {
    Shown s{t.point.to_string(), t.coeff};
    if (labels && labels->contains(t.point)) {
      std::string a = labels->label(t.point);
      std::string b = labels->label(-t.point);
      bool flip = t.point != -t.point && (b.size() < a.size() || (b.size() == a.size() && b < a));
      s = flip ? Shown{b, -t.coeff} : Shown{a, t.coeff};
    }
    shown.push_back(s);
  }
  std::sort(shown.begin(), shown.end(), [](const Shown& a, const Shown& b) { return a.label < b.label; });
  std::string out;
  for (auto& s : shown) {
    long c = s.coeff;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    long m = std::abs(c);
    if (m != 1) out += std::to_string(m);
    out += "[" + s.label + "]";
  }
  return out;
}

Divisor normalize(const FormalSum& raw) {
  Divisor d(raw.curve());
  for (auto& [k, t] : raw.terms()) d.add_class(t.point, t.coeff);
  return d;
}

Divisor make_divisor(const CurvePtr& curve, std::initializer_list<std::pair<long, Point>> terms) {
  return normalize(FormalSum(curve, terms));
}

Divisor beta(const FormalSum& div_f, const FormalSum& div_g) {
  if (div_f.degree() != 0 || div_g.degree() != 0) throw DegreeError("beta: divisors must have degree 0");
  return normalize(convolve(div_f, antipode(div_g)));
}

std::pair<FormalSum, FormalSum> coordinate_divisors(Family family, const Scalar& k) {
  if (family == Family::g) {
    CurvePtr c = Curve::family_g(k);
    Point P = c->named("P"), Q = c->named("Q"), O = c->zero();
    FormalSum y(c, {{1, Q}, {1, P}, {-1, Q + P}, {-1, O}});
    FormalSum z(c, {{1, Q}, {1, -P}, {-1, Q - P}, {-1, O}});
    return {y, z};
  }
  if (family == Family::n) {
    Scalar kk = k;
    if (k.field()->kind() == exact::Field::Kind::rationals)
      kk = Scalar(exact::Field::cyclotomic(3, "g"), k.to_rational());
    CurvePtr c = Curve::family_n(kk);
    Point P = c->named("P"), Q = c->named("Q"), O = c->zero();
    FormalSum y(c, {{1, P}, {1, P + Q}, {1, P - Q}, {-1, O}, {-1, Q}, {-1, -Q}});
    FormalSum z(c, {{1, -P}, {1, -P + Q}, {1, -P - Q}, {-1, O}, {-1, Q}, {-1, -Q}});
    return {y, z};
  }
  throw std::invalid_argument("coordinate_divisors: no family");
}

}  // namespace boyd14::divisors
