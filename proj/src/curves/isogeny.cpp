#include "boyd14/curves/isogeny.hpp"

#include "laurent.hpp"

namespace boyd14::curves {

using detail::Laurent;
using exact::FPoly;
using exact::FRat;

namespace {

Scalar q(long n) { return Scalar(n); }

template <class T>
T K(const Scalar& s) {
  return T(s);
}

// Expansion of (X, Y) at O in the parameter t = -X/Y, from the power series
// w = -1/Y = t^3 + a1 t w + a2 t^2 w + a3 w^2 + a4 t w^2 + a6 w^3.
std::pair<Laurent, Laurent> expansion_at_infinity(const Curve& c, int terms = 12) {
  const size_t n = static_cast<size_t>(terms) + 3;
  using Series = std::vector<Scalar>;
  auto mul = [n](const Series& a, const Series& b) {
    Series r(n, Scalar(0L));
    for (size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  auto shift = [n](const Series& a, size_t s) {
    Series r(n, Scalar(0L));
    for (size_t i = 0; i + s < n; ++i) r[i + s] = a[i];
    return r;
  };
  auto scale = [](Series a, const Scalar& s) {
    for (auto& x : a) x *= s;
    return a;
  };
  auto add = [](Series a, const Series& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  Series w(n, Scalar(0L));
  Series t3(n, Scalar(0L));
  t3[3] = q(1);
  for (size_t it = 0; it < n; ++it) {
    Series w2 = mul(w, w);
    Series next = t3;
    next = add(next, scale(shift(w, 1), c.a1()));
    next = add(next, scale(shift(w, 2), c.a2()));
    next = add(next, scale(w2, c.a3()));
    next = add(next, scale(shift(w2, 1), c.a4()));
    next = add(next, scale(mul(w2, w), c.a6()));
    w = next;
  }
  Laurent wl(0, w, static_cast<int>(n));
  Laurent t(1, {q(1)}, Laurent::kExact);
  return {t / wl, -(wl.inverse())};
}

template <class Impl>
class MapAdapter final : public RationalMap {
 public:
  explicit MapAdapter(Impl impl) : impl_(std::move(impl)) {}
  Scalar x(const Scalar& X) const override { return impl_.template x<Scalar>(X); }
  Scalar y(const Scalar& X, const Scalar& Y) const override { return impl_.template y<Scalar>(X, Y); }
  FRat x_symbolic(const FieldPtr& field) const override {
    return impl_.template x<FRat>(FRat(FPoly::x(field)));
  }
  Scalar pullback(const Curve& source) const override {
    auto [X, Y] = expansion_at_infinity(source);
    Laurent Xp = impl_.template x<Laurent>(X);
    Laurent Yp = impl_.template y<Laurent>(X, Y);
    Laurent tp = -(Xp / Yp);
    if (tp.valuation() != 1) throw std::logic_error("isogeny does not fix O to first order");
    return tp.coeff(1);
  }

 private:
  Impl impl_;
};

struct Rho3N {
  Scalar k, c;
  template <class T>
  T s(const T& X) const {
    return -(K<T>(c) + K<T>(k) * X) / (K<T>(q(3)) * X + K<T>(c));
  }
  template <class T>
  T x(const T& X) const {
    T v = s(X);
    return -(v * v * v + K<T>(q(1))) / (K<T>(k) + K<T>(q(3)) * v);
  }
  template <class T>
  T y(const T& X, const T& Y) const {
    T v = (Y + K<T>(q(3)) * X) / (K<T>(q(3)) * X + K<T>(c));
    return v * v * v;
  }
};

struct Rho2G {
  Scalar k;
  template <class T>
  T x(const T& X) const {
    T x1 = X * (X - K<T>(k)) / (X + K<T>(q(1)));
    return K<T>(q(4) / (k * k)) * x1;
  }
  template <class T>
  T y(const T& X, const T& Y) const {
    T d = X + K<T>(q(1));
    T y1 = (Y + K<T>(k) * X) * (Y + X * X) / (d * d);
    return K<T>(q(8) / (k * k * k)) * y1;
  }
};

struct Rho3G1G7 {
  template <class T>
  T x(const T& X) const {
    T inv = K<T>(q(1)) / X;
    return X - K<T>(q(2)) - inv + inv * inv;
  }
  template <class T>
  T y(const T& X, const T& Y) const {
    T inv = K<T>(q(1)) / X;
    T i2 = inv * inv, i3 = i2 * inv;
    return Y * (K<T>(q(1)) + i2 - K<T>(q(2)) * i3) - K<T>(q(3)) * X + K<T>(q(2)) + K<T>(q(2)) * inv - i2 - i3;
  }
};

struct Mul2 {
  Scalar a1, a2, a3, a4, a6, b2, b4, b6, b8;
  template <class T>
  T x(const T& X) const {
    T X2 = X * X;
    T num = X2 * X2 - K<T>(b4) * X2 - K<T>(q(2) * b6) * X - K<T>(b8);
    T den = K<T>(q(4)) * X2 * X + K<T>(b2) * X2 + K<T>(q(2) * b4) * X + K<T>(b6);
    return num / den;
  }
  template <class T>
  T y(const T& X, const T& Y) const {
    T l = (K<T>(q(3)) * X * X + K<T>(q(2) * a2) * X + K<T>(a4) - K<T>(a1) * Y) /
          (K<T>(q(2)) * Y + K<T>(a1) * X + K<T>(a3));
    T nu = Y - l * X;
    T xp = x(X);
    return -(l + K<T>(a1)) * xp - nu - K<T>(a3);
  }
};

template <class Impl>
Isogeny make(std::string name, CurvePtr source, CurvePtr target, int degree, Impl impl, std::string kernel,
             std::optional<Point> gen) {
  auto map = std::make_shared<const MapAdapter<Impl>>(std::move(impl));
  Scalar lambda = map->pullback(*source);
  return Isogeny{std::move(name), std::move(source), std::move(target), degree, lambda, std::move(kernel),
                 std::move(gen), map};
}

}  // namespace

Point Isogeny::apply(const Point& p) const {
  if (p.is_zero()) return target->zero();
  try {
    Scalar x = map->x(p.x());
    Scalar y = map->y(p.x(), p.y());
    return target->point(x, y);
  } catch (const exact::DivisionByZero&) {
    return target->zero();
  }
}

Isogeny rho3_n(const Scalar& k) {
  CurvePtr src = Curve::family_n(k);
  CurvePtr tgt = Curve::deuring(k, Scalar(k.field(), mpq_class(1)));
  std::optional<Point> gen;
  if (k.field()->cyclotomic_order() == 3) gen = src->named("Q");
  Scalar c = k * k + q(3) * k + q(9);
  return make("rho3_n(" + k.to_string() + ")", src, tgt, 3, Rho3N{k, c}, "<Q>", gen);
}

Isogeny rho2_g(const Scalar& k) {
  if (k.is_zero()) throw SingularCurve("rho2_g: k = 0");
  CurvePtr src = Curve::family_g(k);
  CurvePtr tgt = Curve::family_g(q(-8) / k);
  return make("rho2_g(" + k.to_string() + ")", src, tgt, 2, Rho2G{k}, "<Q>", src->named("Q"));
}

Isogeny rho3_g1_to_g7(const FieldPtr& field) {
  CurvePtr src = Curve::family_g(Scalar(field, mpq_class(1)));
  CurvePtr tgt = Curve::family_g(Scalar(field, mpq_class(7)));
  return make("rho3_g1_to_g7", src, tgt, 3, Rho3G1G7{}, "<P>", src->named("P"));
}

Isogeny multiplication_by_2(const CurvePtr& c) {
  Mul2 m{c->a1(), c->a2(), c->a3(), c->a4(), c->a6(), c->b2(), c->b4(), c->b6(), c->b8()};
  return make("mul2", c, c, 4, m, "E[2]", std::nullopt);
}

Isogeny builtin_isogeny(std::string_view name, const Scalar& parameter) {
  if (name == "rho3_n") return rho3_n(parameter);
  if (name == "rho2_g") return rho2_g(parameter);
  if (name == "rho3_g1_to_g7") return rho3_g1_to_g7(parameter.field());
  throw std::invalid_argument("unknown isogeny " + std::string(name));
}

namespace {

// Y with (X, Y) on c, over the curve's field.
std::vector<Point> lift_x(const CurvePtr& c, const Scalar& X) {
  FieldPtr f = c->field();
  Scalar b = c->a1() * X + c->a3();
  Scalar r = X * X * X + c->a2() * X * X + c->a4() * X + c->a6();
  FPoly quad(f, {-r, b, Scalar(1L)});
  exact::FieldRoots ys = exact::roots_in_field(quad);
  if (ys.cofactor.degree() > 0)
    throw FiberNotRational("Y not rational over " + f->name() + " for X = " + X.to_string(), ys.cofactor);
  std::vector<Point> out;
  for (auto& y : ys.roots) out.push_back(c->point(X, y.value));
  return out;
}

}  // namespace

std::vector<Point> preimages(const Isogeny& iso, const Point& target) {
  FieldPtr f = iso.source->field();
  FRat xs = iso.map->x_symbolic(f);
  std::vector<Point> out;
  FPoly poly = target.is_zero() ? xs.den() : xs.num() - xs.den() * FPoly(target.x().in(f));
  if (target.is_zero()) out.push_back(iso.source->zero());
  exact::FieldRoots xr = exact::roots_in_field(poly);
  if (xr.cofactor.degree() > 0)
    throw FiberNotRational("fiber over " + target.to_string() + " not rational over " + f->name() + ": " +
                               xr.cofactor.to_string(),
                           xr.cofactor);
  for (auto& root : xr.roots)
    for (auto& p : lift_x(iso.source, root.value))
      if (iso.apply(p) == target && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::vector<Point> ntors(const CurvePtr& c, int n) {
  FieldPtr f = c->field();
  Scalar b2 = c->b2(), b4 = c->b4(), b6 = c->b6(), b8 = c->b8();
  FPoly psi2sq(f, {b6, q(2) * b4, b2, q(4)});
  FPoly poly;
  switch (n) {
    case 2:
      poly = psi2sq;
      break;
    case 3:
      poly = FPoly(f, {b8, q(3) * b6, q(3) * b4, b2, q(3)});
      break;
    case 4:
      poly = psi2sq * FPoly(f, {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, q(10) * b8, q(10) * b6, q(5) * b4, b2, q(2)});
      break;
    default:
      throw std::invalid_argument("ntors: n must be 2, 3 or 4");
  }
  std::vector<Point> out{c->zero()};
  for (auto& root : exact::roots_in_field(poly).roots) {
    Scalar X = root.value;
    Scalar b = c->a1() * X + c->a3();
    Scalar r = X * X * X + c->a2() * X * X + c->a4() * X + c->a6();
    exact::FieldRoots ys = exact::roots_in_field(FPoly(f, {-r, b, Scalar(1L)}));
    for (auto& y : ys.roots) {
      Point p = c->point(X, y.value);
      if (p.times(n).is_zero() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  return out;
}

}  // namespace boyd14::curves
