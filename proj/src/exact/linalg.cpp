#include "boyd14/exact/linalg.hpp"

namespace boyd14::exact {

namespace {

// Row-reduces [A | b] in place; returns pivot columns.
std::vector<size_t> eliminate(Matrix& a, std::vector<Scalar>* b) {
  std::vector<size_t> pivots;
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    if (b) std::swap((*b)[row], (*b)[piv]);
    Scalar inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    if (b) (*b)[row] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Scalar m = a[r][col];
      for (size_t k = col; k < cols; ++k) a[r][k] -= m * a[row][k];
      if (b) (*b)[r] -= m * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = eliminate(a, &b);
  for (size_t r = pivots.size(); r < b.size(); ++r)
    if (!b[r].is_zero()) return std::nullopt;
  FieldPtr f = Field::rationals();
  for (auto& x : b) f = join(f, x.field());
  std::vector<Scalar> x(cols, Scalar(f, mpq_class(0)));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

size_t rank(Matrix a) { return eliminate(a, nullptr).size(); }

}  // namespace boyd14::exact
