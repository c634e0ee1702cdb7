#include "boyd14/curves/curve.hpp"

namespace boyd14::curves {

using exact::Field;

namespace {

Scalar q(long n) { return Scalar(n); }

FieldPtr common_field(std::initializer_list<const Scalar*> xs) {
  FieldPtr f = Field::rationals();
  for (auto* x : xs) f = exact::join(f, x->field());
  return f;
}

}  // namespace

Curve::Curve(FieldPtr field, std::array<Scalar, 5> a, std::string descriptor, Family family, std::optional<Scalar> k)
    : field_(std::move(field)), a_(std::move(a)), descriptor_(std::move(descriptor)), family_(family), k_(std::move(k)) {
  for (auto& c : a_) c = c.in(field_);
  if (discriminant().is_zero()) throw SingularCurve("singular curve " + descriptor_);
}

CurvePtr Curve::weierstrass(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4, const Scalar& a6,
                            std::string descriptor) {
  FieldPtr f = common_field({&a1, &a2, &a3, &a4, &a6});
  if (descriptor.empty())
    descriptor = "W(" + a1.to_string() + "," + a2.to_string() + "," + a3.to_string() + "," + a4.to_string() + "," +
                 a6.to_string() + ")";
  return std::make_shared<const Curve>(f, std::array<Scalar, 5>{a1, a2, a3, a4, a6}, std::move(descriptor),
                                       Family::none, std::nullopt);
}

CurvePtr Curve::deuring(const Scalar& a1, const Scalar& a3) {
  FieldPtr f = common_field({&a1, &a3});
  Scalar z(f, mpq_class(0));
  return std::make_shared<const Curve>(f, std::array<Scalar, 5>{a1, z, a3, z, z},
                                       "D(" + a1.to_string() + "," + a3.to_string() + ")", Family::none, std::nullopt);
}

CurvePtr Curve::short_weierstrass(const Scalar& a, const Scalar& b) {
  FieldPtr f = common_field({&a, &b});
  Scalar z(f, mpq_class(0));
  return std::make_shared<const Curve>(f, std::array<Scalar, 5>{z, z, z, a, b},
                                       "SW(" + a.to_string() + "," + b.to_string() + ")", Family::none, std::nullopt);
}

CurvePtr Curve::family_n(const Scalar& k) {
  Scalar z(k.field(), mpq_class(0));
  Scalar c = k * k + q(3) * k + q(9);
  if (c.is_zero()) throw SingularCurve("E_n: k^2+3k+9 = 0");
  return std::make_shared<const Curve>(k.field(), std::array<Scalar, 5>{k + q(6), z, c, z, z},
                                       "En(" + k.to_string() + ")", Family::n, k);
}

CurvePtr Curve::family_g(const Scalar& k) {
  Scalar z(k.field(), mpq_class(0));
  return std::make_shared<const Curve>(k.field(), std::array<Scalar, 5>{k - q(2), z, k, z, z},
                                       "Eg(" + k.to_string() + ")", Family::g, k);
}

CurvePtr Curve::over(const FieldPtr& f) const {
  if (f == field_) return shared_from_this();
  std::optional<Scalar> k;
  if (k_) k = k_->in(f);
  return std::make_shared<const Curve>(f, a_, descriptor_, family_, k);
}

Scalar Curve::b2() const { return a1() * a1() + q(4) * a2(); }
Scalar Curve::b4() const { return q(2) * a4() + a1() * a3(); }
Scalar Curve::b6() const { return a3() * a3() + q(4) * a6(); }
Scalar Curve::b8() const {
  return a1() * a1() * a6() + q(4) * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}
Scalar Curve::c4() const { return b2() * b2() - q(24) * b4(); }
Scalar Curve::c6() const { return -b2() * b2() * b2() + q(36) * b2() * b4() - q(216) * b6(); }
Scalar Curve::discriminant() const {
  Scalar B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - q(8) * B4 * B4 * B4 - q(27) * B6 * B6 + q(9) * B2 * B4 * B6;
}

const Scalar& Curve::k() const {
  if (!k_) throw std::domain_error(descriptor_ + " is not a family curve");
  return *k_;
}

bool Curve::is_deuring() const { return a2().is_zero() && a4().is_zero() && a6().is_zero(); }

bool Curve::contains(const Scalar& x, const Scalar& y) const {
  Scalar lhs = y * y + a1() * x * y + a3() * y;
  Scalar rhs = x * x * x + a2() * x * x + a4() * x + a6();
  return lhs == rhs;
}

Point Curve::zero() const { return Point::infinity(shared_from_this()); }

Point Curve::point(const Scalar& x, const Scalar& y) const { return Point(shared_from_this(), x, y); }

Scalar Curve::negate_y(const Scalar& x, const Scalar& y) const { return -y - a1() * x - a3(); }

Point Curve::named(std::string_view name) const {
  Scalar z(field_, mpq_class(0));
  if (name == "0" || name == "O") return zero();
  if (!is_deuring()) throw std::invalid_argument("named points need a Deuring model");
  Point p = point(z, z);
  if (name == "P") return p;
  if (name == "-P") return -p;
  if (name == "2P") return p + p;
  if (family_ == Family::g) {
    Point qq = point(q(-1), q(-1));
    if (name == "Q") return qq;
    if (name == "P+Q") return p + qq;
    if (name == "P-Q") return p - qq;
    if (name == "-P-Q") return -(p + qq);
    if (name == "A" || name == "Q'" || name == "Q''") {
      if (!(*k_ == q(1)) || field_->cyclotomic_order() != 7)
        throw std::invalid_argument(std::string(name) + " is defined on E_g(1) over Q(zeta7) only");
      const auto& c = exact::cyclotomic7_constants();
      if (name == "A") return point(c.xi, c.xi * c.xi - q(1));
      Scalar x = (q(3) + (name == "Q'" ? c.sqrt_m7 : -c.sqrt_m7)) / q(8);
      Scalar y = -(a1() * x + a3()) / q(2);
      return point(x, y);
    }
  }
  if (family_ == Family::n) {
    if (name == "Q" || name == "P+Q" || name == "P-Q" || name == "-Q") {
      if (field_->cyclotomic_order() != 3) throw std::invalid_argument("Q on E_n needs Q(zeta3)");
      Scalar eps = Scalar::generator(field_);
      const Scalar& kk = *k_;
      Scalar c = kk * kk + q(3) * kk + q(9);
      Point qq = point(-c / q(3), c / q(9) * (eps + q(2)) * (kk - q(3) * eps));
      if (name == "Q") return qq;
      if (name == "-Q") return -qq;
      if (name == "P+Q") return p + qq;
      return p - qq;
    }
  }
  throw std::invalid_argument("unknown point name '" + std::string(name) + "' on " + descriptor_);
}

bool operator==(const Curve& a, const Curve& b) {
  if (&a == &b) return true;
  if (a.field_ != b.field_) return false;
  for (size_t i = 0; i < 5; ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Point Point::infinity(CurvePtr curve) {
  Point p;
  p.curve_ = std::move(curve);
  return p;
}

Point::Point(CurvePtr curve, Scalar x, Scalar y) : curve_(std::move(curve)), inf_(false) {
  x_ = x.in(curve_->field());
  y_ = y.in(curve_->field());
  if (!curve_->contains(x_, y_))
    throw std::invalid_argument("point (" + x_.to_string() + "," + y_.to_string() + ") not on " +
                                curve_->descriptor());
}

const Scalar& Point::x() const {
  if (inf_) throw std::domain_error("point at infinity has no X");
  return x_;
}

const Scalar& Point::y() const {
  if (inf_) throw std::domain_error("point at infinity has no Y");
  return y_;
}

Point Point::operator-() const {
  if (inf_) return *this;
  Point r = *this;
  r.y_ = curve_->negate_y(x_, y_);
  return r;
}

Point Point::operator+(const Point& o) const {
  if (!(*curve_ == *o.curve_)) throw std::invalid_argument("points on different curves");
  if (inf_) return o;
  if (o.inf_) return *this;
  const Curve& c = *curve_;
  Scalar lambda, nu;
  if (x_ == o.x_) {
    if (!(y_ == o.y_) || (q(2) * y_ + c.a1() * x_ + c.a3()).is_zero()) return Point::infinity(curve_);
    Scalar den = q(2) * y_ + c.a1() * x_ + c.a3();
    lambda = (q(3) * x_ * x_ + q(2) * c.a2() * x_ + c.a4() - c.a1() * y_) / den;
    nu = (-x_ * x_ * x_ + c.a4() * x_ + q(2) * c.a6() - c.a3() * y_) / den;
  } else {
    Scalar dx = o.x_ - x_;
    lambda = (o.y_ - y_) / dx;
    nu = (y_ * o.x_ - o.y_ * x_) / dx;
  }
  Point r;
  r.curve_ = curve_;
  r.inf_ = false;
  r.x_ = lambda * lambda + c.a1() * lambda - c.a2() - x_ - o.x_;
  r.y_ = -(lambda + c.a1()) * r.x_ - nu - c.a3();
  return r;
}

Point Point::times(long n) const {
  if (n < 0) return (-*this).times(-n);
  Point acc = Point::infinity(curve_);
  Point base = *this;
  while (n) {
    if (n & 1) acc += base;
    n >>= 1;
    if (n) base += base;
  }
  return acc;
}

Point operator*(long n, const Point& p) { return p.times(n); }

std::optional<int> Point::order(int bound) const {
  Point acc = *this;
  for (int m = 1; m <= bound; ++m) {
    if (acc.is_zero()) return m;
    acc += *this;
  }
  return std::nullopt;
}

std::string Point::to_string() const {
  if (inf_) return "0";
  return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

bool operator==(const Point& a, const Point& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

CurvePtr parse_curve(std::string_view text, const FieldPtr& field) {
  size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw std::invalid_argument("parse_curve: expected NAME(args): " + std::string(text));
  std::string name(text.substr(0, open));
  std::vector<Scalar> args;
  int depth = 0;
  size_t start = open + 1;
  for (size_t i = open + 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if ((c == ',' && depth == 0) || (c == ')' && depth == 0)) {
      args.push_back(exact::parse_scalar(text.substr(start, i - start), field));
      start = i + 1;
    }
    if (c == ')') --depth;
  }
  auto need = [&](size_t n) {
    if (args.size() != n) throw std::invalid_argument("parse_curve: " + name + " takes " + std::to_string(n) + " arguments");
  };
  if (name == "D") return need(2), Curve::deuring(args[0], args[1]);
  if (name == "SW") return need(2), Curve::short_weierstrass(args[0], args[1]);
  if (name == "W") return need(5), Curve::weierstrass(args[0], args[1], args[2], args[3], args[4]);
  if (name == "Eg") return need(1), Curve::family_g(args[0]);
  if (name == "En") return need(1), Curve::family_n(args[0]);
  throw std::invalid_argument("parse_curve: unknown model " + name);
}

Point ShortModel::to_short(const Point& p) const {
  if (p.is_zero()) return target->zero();
  const Curve& c = *source;
  return target->point(p.x() + x_shift, p.y() + (c.a1() * p.x() + c.a3()) / q(2));
}

Point ShortModel::from_short(const Point& p) const {
  if (p.is_zero()) return source->zero();
  const Curve& c = *source;
  Scalar x = p.x() - x_shift;
  return source->point(x, p.y() - (c.a1() * x + c.a3()) / q(2));
}

Scalar ShortModel::slope_shift() const { return -source->a1() / q(2); }

ShortModel to_short_weierstrass(const CurvePtr& c) {
  Scalar a = -c->c4() / q(48);
  Scalar b = -c->c6() / q(864);
  return {c, Curve::short_weierstrass(a, b), c->b2() / q(12)};
}

std::optional<std::pair<Scalar, Scalar>> deuring_to_plane(const Point& p) {
  const Curve& c = *p.curve();
  if (p.is_zero()) return std::nullopt;
  const Scalar& X = p.x();
  const Scalar& Y = p.y();
  const Scalar& k = c.k();
  if (c.family() == Family::g) {
    Scalar d = X - k;
    if (d.is_zero()) return std::nullopt;
    return std::make_pair((X - Y) / d, ((k - q(1)) * X + k + Y) / d);
  }
  if (c.family() == Family::n) {
    Scalar cc = k * k + q(3) * k + q(9);
    Scalar d = q(3) * X + cc;
    if (d.is_zero()) return std::nullopt;
    return std::make_pair((Y + q(3) * X) / d, -(Y + (k + q(3)) * X + cc) / d);
  }
  throw std::domain_error("deuring_to_plane: not a family curve");
}

Point plane_to_deuring(const CurvePtr& c, const Scalar& y, const Scalar& z) {
  const Scalar& k = c->k();
  Scalar s = y + z;
  if (c->family() == Family::g) {
    Scalar d = s - k;
    if (d.is_zero()) return c->zero();
    return c->point(k * (s + q(1)) / d, k * (-y * k + z + q(1)) / d);
  }
  Scalar cc = k * k + q(3) * k + q(9);
  Scalar d = k + q(3) * s;
  if (d.is_zero()) return c->zero();
  return c->point(-cc * (q(1) + s) / d, cc * (k * y + q(3) * z + q(3)) / d);
}

PlaneImage plane_to_deuring(Family family, const Scalar& k) {
  PlaneImage out;
  if (family == Family::g) {
    out.curve = Curve::family_g(k);
    const Curve& c = *out.curve;
    out.points.emplace("(0,0)", c.named("Q"));
    out.points.emplace("(0,-1)", c.named("P"));
    out.points.emplace("(1:0:0)", c.named("P+Q"));
    out.points.emplace("(0:1:0)", c.named("-P-Q"));
    out.points.emplace("(1:-1:0)", c.zero());
  } else if (family == Family::n) {
    out.curve = Curve::family_n(k);
    const Curve& c = *out.curve;
    out.points.emplace("(0,-1)", c.named("P"));
    if (k.field()->cyclotomic_order() == 3) out.points.emplace("(1:-e:0)", c.named("Q"));
  } else {
    throw std::invalid_argument("plane_to_deuring: no family");
  }
  return out;
}

Scalar family_polynomial(Family family, const Scalar& k, const Scalar& y, const Scalar& z) {
  if (family == Family::n) return y * y * y + z * z * z + q(1) - k * y * z;
  if (family == Family::g) return (q(1) + y) * (q(1) + z) * (y + z) - k * y * z;
  throw std::invalid_argument("family_polynomial: no family");
}

}  // namespace boyd14::curves
