#pragma once

// Truncated Laurent series in a local parameter t over an exact field.
// Only used to read off the pullback of the invariant differential at O.

#include <algorithm>
#include <limits>
#include <vector>

#include "boyd14/exact/field.hpp"

namespace boyd14::curves::detail {

using exact::FieldPtr;
using exact::Scalar;

class Laurent {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  Laurent() : Laurent(Scalar(0L)) {}
  // An exact constant.
  Laurent(const Scalar& c) : val_(0), prec_(kExact), c_{c} { strip(); }  // NOLINT
  // Coefficients of t^val, t^(val+1), ... known up to t^prec (exclusive).
  Laurent(int val, std::vector<Scalar> c, int prec) : val_(val), prec_(prec), c_(std::move(c)) { strip(); }

  int valuation() const { return val_; }
  int precision() const { return prec_; }
  Scalar coeff(int e) const {
    if (e >= prec_) throw std::domain_error("Laurent: coefficient beyond precision");
    if (e < val_ || e - val_ >= static_cast<int>(c_.size())) return Scalar(0L);
    return c_[static_cast<size_t>(e - val_)];
  }
  bool is_zero() const { return c_.empty(); }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    int prec = std::min(a.prec_, b.prec_);
    int val = std::min(a.val_, b.val_);
    int hi = std::min(prec, std::max(a.top(), b.top()));
    std::vector<Scalar> c;
    for (int e = val; e < hi; ++e) c.push_back(a.get(e) + b.get(e));
    return Laurent(val, std::move(c), prec);
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && a.prec_ == kExact) return a;
    if (b.is_zero() && b.prec_ == kExact) return b;
    int val = a.val_ + b.val_;
    int prec = kExact;
    if (a.prec_ != kExact) prec = std::min(prec, a.prec_ + b.val_);
    if (b.prec_ != kExact) prec = std::min(prec, b.prec_ + a.val_);
    int hi = std::min(prec, a.top() + b.top() - 1);
    std::vector<Scalar> c;
    for (int e = val; e < hi; ++e) {
      Scalar s(0L);
      for (int i = a.val_; i < a.top(); ++i) {
        int j = e - i;
        if (j < b.val_ || j >= b.top()) continue;
        s += a.get(i) * b.get(j);
      }
      c.push_back(s);
    }
    return Laurent(val, std::move(c), prec);
  }

  // Relative precision `rel` is used when inverting a non-monomial exact series.
  Laurent inverse(int rel = 16) const {
    if (is_zero()) throw exact::DivisionByZero("Laurent: inverse of zero");
    int r = prec_ == kExact ? (c_.size() == 1 ? 1 : rel) : prec_ - val_;
    std::vector<Scalar> b(static_cast<size_t>(r));
    Scalar inv = c_[0].inverse();
    b[0] = inv;
    for (int n = 1; n < r; ++n) {
      Scalar s(0L);
      for (int i = 1; i <= n && i < static_cast<int>(c_.size()); ++i) s += c_[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
      b[static_cast<size_t>(n)] = -s * inv;
    }
    int prec = (prec_ == kExact && c_.size() == 1) ? kExact : -val_ + r;
    return Laurent(-val_, std::move(b), prec);
  }
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

 private:
  int top() const { return val_ + static_cast<int>(c_.size()); }
  Scalar get(int e) const {
    if (e < val_ || e >= top()) return Scalar(0L);
    return c_[static_cast<size_t>(e - val_)];
  }
  void strip() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<int>(lead);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) val_ = prec_ == kExact ? 0 : prec_;
    if (prec_ != kExact && top() > prec_) c_.resize(static_cast<size_t>(prec_ - val_));
  }

  int val_;
  int prec_;
  std::vector<Scalar> c_;
};

}  // namespace boyd14::curves::detail
