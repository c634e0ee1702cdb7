#include "boyd14/modforms/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace boyd14::modforms {

QSeries::QSeries(int valuation, std::vector<mpq_class> coeffs, int order)
    : v_(valuation), c_(std::move(coeffs)), order_(order) {
  c_.resize(static_cast<size_t>(std::max(0, order_ - v_)));
  if (order_ < v_) v_ = order_;
}

QSeries QSeries::constant(const mpq_class& c, int order) { return monomial(0, order, c); }

QSeries QSeries::monomial(int e, int order, const mpq_class& c) {
  std::vector<mpq_class> v(1, c);
  return QSeries(e, v, order);
}

mpq_class QSeries::operator[](int n) const {
  if (n >= order_) throw std::out_of_range("QSeries: coefficient of q^" + std::to_string(n) + " beyond O(q^" + std::to_string(order_) + ")");
  if (n < v_) return 0;
  return c_[static_cast<size_t>(n - v_)];
}

int QSeries::leading_exponent() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return v_ + static_cast<int>(i);
  return order_;
}

void QSeries::strip() {
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
  v_ += static_cast<int>(k);
}

QSeries& QSeries::operator+=(const QSeries& b) {
  int v = std::min(v_, b.v_), o = std::min(order_, b.order_);
  std::vector<mpq_class> c(static_cast<size_t>(std::max(0, o - v)));
  for (int n = v; n < o; ++n) c[static_cast<size_t>(n - v)] = (*this)[n] + b[n];
  *this = QSeries(v, std::move(c), o);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& b) { return *this += -b; }

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int v = a.v_ + b.v_;
  int o = std::min(a.v_ + b.order_, b.v_ + a.order_);
  size_t len = static_cast<size_t>(std::max(0, o - v));
  std::vector<mpq_class> c(len);
  for (size_t i = 0; i < std::min(len, a.c_.size()); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; i + j < len && j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QSeries(v, std::move(c), o);
}

QSeries operator*(QSeries a, const mpq_class& c) {
  for (auto& x : a.c_) x *= c;
  return a;
}

QSeries QSeries::inverse() const {
  QSeries a = *this;
  a.strip();
  if (a.c_.empty()) throw std::domain_error("QSeries::inverse: series is zero to its known order");
  const size_t len = a.c_.size();
  std::vector<mpq_class> b(len);
  mpq_class inv = 1 / a.c_[0];
  b[0] = inv;
  for (size_t k = 1; k < len; ++k) {
    mpq_class s = 0;
    for (size_t i = 1; i <= k; ++i) s += a.c_[i] * b[k - i];
    b[k] = -s * inv;
  }
  return QSeries(-a.v_, std::move(b), -a.v_ + static_cast<int>(len));
}

QSeries QSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return constant(1, order_ - leading_exponent());
  QSeries r = *this;
  for (int i = 1; i < n; ++i) r = r * *this;
  return r;
}

QSeries QSeries::theta() const {
  QSeries r = *this;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] *= v_ + static_cast<int>(i);
  return r;
}

QSeries QSeries::substitute(int m) const {
  if (m < 1) throw std::invalid_argument("QSeries::substitute: m must be positive");
  std::vector<mpq_class> c(c_.size() * static_cast<size_t>(m));
  for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(m)] = c_[i];
  return QSeries(v_ * m, std::move(c), order_ * m);
}

QSeries QSeries::truncate(int order) const {
  if (order >= order_) return *this;
  return QSeries(v_, c_, order);
}

std::string QSeries::to_string(int terms) const {
  std::ostringstream os;
  int shown = 0;
  for (size_t i = 0; i < c_.size() && shown < terms; ++i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    int e = v_ + static_cast<int>(i);
    mpq_class m = abs(c);
    if (shown == 0) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    if (m != 1 || e == 0) os << m.get_str();
    if (e != 0) os << "q";
    if (e != 0 && e != 1) os << "^" << e;
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << order_ << ")";
  return os.str();
}

nlohmann::json QSeries::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (auto& x : c_) c.push_back(x.get_str());
  return {{"valuation", v_}, {"order", order_}, {"coefficients", c}};
}

QSeries QSeries::from_json(const nlohmann::json& j) {
  std::vector<mpq_class> c;
  for (auto& x : j.at("coefficients")) {
    mpq_class q(x.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  return QSeries(j.at("valuation").get<int>(), std::move(c), j.at("order").get<int>());
}

bool operator==(const QSeries& a, const QSeries& b) {
  int o = std::min(a.order_, b.order_);
  for (int n = std::min(a.v_, b.v_); n < o; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

QSeries hadamard(const QSeries& a, const QSeries& b) {
  int v = std::max(a.valuation(), b.valuation()), o = std::min(a.order(), b.order());
  std::vector<mpq_class> c(static_cast<size_t>(std::max(0, o - v)));
  for (int n = v; n < o; ++n) c[static_cast<size_t>(n - v)] = a[n] * b[n];
  return QSeries(v, std::move(c), o);
}

namespace {

// prod (1 - q^n) = sum (-1)^k q^(k(3k-1)/2), to O(q^len).
QSeries euler_product(int len) {
  std::vector<mpq_class> c(static_cast<size_t>(std::max(len, 0)));
  for (long k = 0;; ++k) {
    bool any = false;
    for (long g : {k * (3 * k - 1) / 2, k * (3 * k + 1) / 2}) {
      if (g >= len) continue;
      any = true;
      c[static_cast<size_t>(g)] = (k % 2) ? -1 : 1;
      if (k == 0) break;
    }
    if (!any) break;
  }
  return QSeries(0, std::move(c), len);
}

std::vector<long> sigma1(int n) {
  std::vector<long> s(static_cast<size_t>(std::max(n, 0)) + 1, 0);
  for (int d = 1; d <= n; ++d)
    for (int k = d; k <= n; k += d) s[static_cast<size_t>(k)] += d;
  return s;
}

}  // namespace

QSeries eta_product(const std::vector<std::pair<int, int>>& factors, int order) {
  long w = 0;
  for (auto [d, e] : factors) {
    if (d < 1) throw std::invalid_argument("eta_product: divisor must be positive");
    w += static_cast<long>(d) * e;
  }
  if (w % 24) throw std::invalid_argument("eta_product: sum d e must be divisible by 24");
  const int v = static_cast<int>(w / 24);
  const int len = std::max(order - v, 0);
  QSeries r = QSeries::constant(1, len);
  for (auto [d, e] : factors) {
    if (e == 0) continue;
    QSeries base = euler_product((len + d - 1) / d).substitute(d).truncate(len);
    r = r * base.pow(e);
  }
  return QSeries(v, r.coeffs(), order);
}

QSeries newform_14(int order) { return eta_product({{1, 1}, {2, 1}, {7, 1}, {14, 1}}, order); }

QSeries e2_stack(int m, int order) {
  if (m < 1) throw std::invalid_argument("e2_stack: m must be positive");
  const int len = std::max(order, 0);
  std::vector<mpq_class> c(static_cast<size_t>(len));
  if (len > 0) c[0] = 1;
  auto s = sigma1(len / m);
  for (int n = 1; static_cast<long>(n) * m < len; ++n) c[static_cast<size_t>(n * m)] = -24 * s[static_cast<size_t>(n)];
  return QSeries(0, std::move(c), len);
}

std::pair<QSeries, QSeries> modular_param_14a1(int order) {
  if (order < 1) throw std::invalid_argument("modular_param_14a1: order must be positive");
  // Solve four extra steps so the curve residual is known through q^(order-1).
  const int top = order + 4;
  const QSeries f = newform_14(top + 4);
  // x_s for s >= -2 at xs[s + 2]; y_s for s >= -3 at ys[s + 3].
  std::vector<mpq_class> xs{1}, ys{-1};
  std::vector<mpq_class> x2{1};  // (X^2)_k at x2[k + 4]
  auto x = [&](int i) -> mpq_class {
    size_t k = static_cast<size_t>(i + 2);
    return (i < -2 || k >= xs.size()) ? mpq_class(0) : xs[k];
  };
  auto y = [&](int j) -> mpq_class {
    size_t k = static_cast<size_t>(j + 3);
    return (j < -3 || k >= ys.size()) ? mpq_class(0) : ys[k];
  };
  auto square_x = [&](int k) {
    mpq_class s = 0;
    for (int i = -2; i <= k + 2; ++i) s += x(i) * x(k - i);
    return s;
  };
  const mpq_class a1 = f[1], x0 = xs[0], y0 = ys[0];

  for (int s = -1; s <= top; ++s) {
    // With x_s = y_(s-1) = 0, the q^(s-4) coefficient of Y^2+5XY+7Y-X^3 ...
    const int e = s - 4;
    mpq_class c = 7 * y(e);
    for (int j = -3; j <= e + 3; ++j) c += y(j) * y(e - j);
    for (int i = -2; i <= e + 3; ++i) c += 5 * x(i) * y(e - i);
    mpq_class partial = square_x(s - 2);
    for (int i = -2; i <= s; ++i) c -= x(i) * (e - i == s - 2 ? partial : x2[static_cast<size_t>(e - i + 4)]);
    // ... and the q^s coefficient of f (2Y + 5X + 7).
    mpq_class d = 0;
    for (int n = 1; n <= s + 3; ++n) d += f[n] * (2 * y(s - n) + 5 * x(s - n) + (s == n ? 7 : 0));
    // Unknowns enter as c + 2 y0 Y' - 3 x0^2 X' = 0 and s X' = d + 2 a1 Y'.
    mpq_class det = y0 * s / a1 - 3 * x0 * x0;
    if (det == 0) throw ParamError("modular_param_14a1: singular recurrence at q^" + std::to_string(s));
    mpq_class xn = (y0 * d / a1 - c) / det;
    mpq_class yn = (s * xn - d) / (2 * a1);
    xs.push_back(xn);
    ys.push_back(yn);
    x2.push_back(square_x(s - 2));
  }

  QSeries X(-2, std::vector<mpq_class>(xs.begin(), xs.end()), top);
  QSeries Y(-3, std::vector<mpq_class>(ys.begin(), ys.end()), top);
  QSeries seven = QSeries::constant(7, top);
  QSeries curve = Y * Y + X * Y * mpq_class(5) + Y * mpq_class(7) - X.pow(3);
  QSeries ode = X.theta() - f * (Y * mpq_class(2) + X * mpq_class(5) + seven);
  if (!curve.truncate(order).is_zero() || !ode.truncate(order).is_zero())
    throw ParamError("modular_param_14a1: recurrence inconsistent with the curve or the differential");
  return {X.truncate(order), Y.truncate(order)};
}

std::vector<mpq_class> decompose_log_derivative(const QSeries& f, const std::vector<int>& levels) {
  if (f.is_zero()) throw DecompositionError("decompose_log_derivative: zero series");
  QSeries l = f.theta() / f;
  if (l.valuation() < 0) throw DecompositionError("decompose_log_derivative: pole in theta(F)/F");
  const int o = l.order();
  const size_t k = levels.size();
  std::vector<QSeries> basis;
  for (int m : levels) basis.push_back(e2_stack(m, o));

  // Row-reduce the augmented system over every known coefficient.
  std::vector<std::vector<mpq_class>> rows;
  for (int n = 0; n < o; ++n) {
    std::vector<mpq_class> r;
    for (auto& b : basis) r.push_back(b[n]);
    r.push_back(l[n]);
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t c = 0; c < k && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) throw DecompositionError("decompose_log_derivative: E2 stack is degenerate at this order");
    std::swap(rows[piv], rows[rank]);
    mpq_class inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class t = rows[r][c];
      for (size_t j = c; j <= k; ++j) rows[r][j] -= t * rows[rank][j];
    }
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r)
    if (rows[r][k] != 0)
      throw DecompositionError("decompose_log_derivative: no exact solution (coefficient of q^" + std::to_string(r) + " fails)");
  std::vector<mpq_class> out;
  for (size_t c = 0; c < k; ++c) out.push_back(rows[c][k]);
  return out;
}

void write_coefficients_csv(std::ostream& os, const std::vector<mpq_class>& a) {
  os << "n,a\n";
  for (size_t n = 1; n < a.size(); ++n) os << n << ',' << a[n].get_str() << '\n';
}

std::vector<mpq_class> read_coefficients_csv(std::istream& is) {
  std::vector<mpq_class> a(1);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || (lineno == 1 && !std::isdigit(static_cast<unsigned char>(line[0])))) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("coefficient CSV line " + std::to_string(lineno) + ": expected n,a");
    size_t n = std::stoul(line.substr(0, comma));
    if (n != a.size()) throw std::invalid_argument("coefficient CSV line " + std::to_string(lineno) + ": indices must run 1, 2, ...");
    mpq_class v(line.substr(comma + 1));
    v.canonicalize();
    a.push_back(v);
  }
  return a;
}

std::vector<mpq_class> coefficient_list(const QSeries& f) {
  if (f.valuation() < 0) throw std::invalid_argument("coefficient_list: series has a pole");
  std::vector<mpq_class> a;
  for (int n = 0; n < f.order(); ++n) a.push_back(f[n]);
  return a;
}

}  // namespace boyd14::modforms
