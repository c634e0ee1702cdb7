#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace boyd14::modforms {

// Truncated Laurent series sum c_i q^(v + i) + O(q^order).
class QSeries {
 public:
  QSeries() = default;
  QSeries(int valuation, std::vector<mpq_class> coeffs, int order);
  // The constant c, known to O(q^order).
  static QSeries constant(const mpq_class& c, int order);
  // q^e, known to O(q^order).
  static QSeries monomial(int e, int order, const mpq_class& c = 1);

  int valuation() const { return v_; }
  int order() const { return order_; }
  // Coefficient of q^n; throws std::out_of_range at or beyond the order.
  mpq_class operator[](int n) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  // Lowest exponent with a nonzero coefficient, or order() if none.
  int leading_exponent() const;
  bool is_zero() const { return leading_exponent() == order_; }

  QSeries& operator+=(const QSeries& b);
  QSeries& operator-=(const QSeries& b);
  QSeries operator-() const;
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const mpq_class& c);
  QSeries inverse() const;
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }
  QSeries pow(int n) const;

  // q d/dq.
  QSeries theta() const;
  // q -> q^m.
  QSeries substitute(int m) const;
  // Drop everything at or beyond q^order.
  QSeries truncate(int order) const;

  // "q^-2 + q^-1 + 2q + ... + O(q^8)"; at most `terms` nonzero terms.
  std::string to_string(int terms = 12) const;
  nlohmann::json to_json() const;
  static QSeries from_json(const nlohmann::json& j);

  // Equal where both are known.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  void strip();
  int v_ = 0;
  std::vector<mpq_class> c_;
  int order_ = 0;
};

// Coefficientwise product sum a_n b_n q^n.
QSeries hadamard(const QSeries& a, const QSeries& b);

// prod eta(d tau)^e to O(q^order). The total weight sum d e / 24 must be an
// integer; it becomes the valuation.
QSeries eta_product(const std::vector<std::pair<int, int>>& factors, int order);

// eta(tau) eta(2 tau) eta(7 tau) eta(14 tau), the newform of level 14.
QSeries newform_14(int order);

// Holomorphic E2(m tau) = 1 - 24 sum sigma_1(n) q^(m n).
QSeries e2_stack(int m, int order);

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// X(q), Y(q) on Y^2 + 5XY + 7Y = X^3, both to O(q^order). Throws ParamError
// if the seeded recurrence fails to satisfy the curve or the differential.
std::pair<QSeries, QSeries> modular_param_14a1(int order);

struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// c with theta(F)/F = sum_m c_m E2(m tau) for m in `levels`, verified to the
// full order of theta(F)/F.
std::vector<mpq_class> decompose_log_derivative(const QSeries& f, const std::vector<int>& levels = {1, 2, 7, 14});

// Newform coefficients a(1..n) as "n,a(n)" lines.
void write_coefficients_csv(std::ostream& os, const std::vector<mpq_class>& a);
// Inverse of write_coefficients_csv; index 0 of the result is unused (zero).
std::vector<mpq_class> read_coefficients_csv(std::istream& is);

// a(0..n-1) of a series with valuation >= 0.
std::vector<mpq_class> coefficient_list(const QSeries& f);

}  // namespace boyd14::modforms
