#include "boyd14/modforms/level14.hpp"

#include <stdexcept>
#include <vector>

#include "boyd14/modforms/qseries.hpp"
#include "boyd14/modforms/walgebra.hpp"

namespace boyd14::modforms {

std::map<long, std::string> cusp_images_14(int order) {
  auto [X, Y] = modular_param_14a1(order);
  const QSeries one = QSeries::constant(1, order);
  const std::vector<QSeries> units = {X + one, Y, Y + X * mpq_class(7)};
  // Divisors of the same functions on the curve.
  const std::map<std::string, std::vector<int>> known = {
      {"0", {-2, -3, -3}}, {"P", {0, 3, 1}}, {"Q", {2, 0, 0}}, {"P+Q", {0, 0, 2}}};

  std::vector<WElem> divs;
  for (auto& u : units) {
    auto c = decompose_log_derivative(u);
    divs.push_back(cusp_divisor(14, {{1, c[0]}, {2, c[1]}, {7, c[2]}, {14, c[3]}}));
  }
  std::map<long, std::string> out;
  for (long m : {1L, 2L, 7L, 14L}) {
    std::vector<int> v;
    for (auto& d : divs) {
      mpq_class x = d[m];
      if (x.get_den() != 1) throw std::runtime_error("cusp_images_14: non-integral cusp divisor");
      v.push_back(static_cast<int>(x.get_num().get_si()));
    }
    for (auto& [label, u] : known)
      if (u == v) out[m] = label;
    if (!out.count(m)) throw std::runtime_error("cusp_images_14: no point matches w" + std::to_string(m));
  }
  return out;
}

}  // namespace boyd14::modforms
