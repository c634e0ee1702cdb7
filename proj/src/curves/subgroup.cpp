#include "boyd14/curves/subgroup.hpp"

#include <algorithm>
#include <cctype>

namespace boyd14::curves {

std::string combination_label(const std::vector<std::string>& names, const std::vector<int>& mult) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    int m = mult[i];
    if (m == 0) continue;
    if (m < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(m) != 1) out += std::to_string(std::abs(m));
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

Subgroup::Subgroup(std::vector<std::pair<std::string, Point>> generators, int order_bound)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("Subgroup: no generators");
  curve_ = gens_[0].second.curve();
  std::vector<std::string> names;
  std::vector<int> orders;
  for (auto& [name, p] : gens_) {
    auto o = p.order(order_bound);
    if (!o) throw std::domain_error("Subgroup: generator " + name + " has order above " + std::to_string(order_bound));
    names.push_back(name);
    orders.push_back(*o);
  }
  std::vector<std::vector<int>> tuples{{}};
  for (int o : orders) {
    std::vector<std::vector<int>> next;
    for (auto& t : tuples)
      for (int m = 0; m < o; ++m) {
        next.push_back(t);
        next.back().push_back(m);
      }
    tuples = std::move(next);
  }
  auto nonzero = [](const std::vector<int>& t) { return std::count_if(t.begin(), t.end(), [](int m) { return m != 0; }); };
  std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
    auto na = nonzero(a), nb = nonzero(b);
    return na != nb ? na < nb : a < b;
  });
  for (auto& t : tuples) {
    Point p = curve_->zero();
    for (size_t i = 0; i < t.size(); ++i) p += gens_[i].second.times(t[i]);
    std::string key = p.to_string();
    if (index_.count(key)) continue;
    index_.emplace(key, elements_.size());
    elements_.push_back({p, combination_label(names, t)});
  }
}

const std::string& Subgroup::label(const Point& p) const {
  auto it = index_.find(p.to_string());
  if (it == index_.end()) throw std::invalid_argument("point " + p.to_string() + " not in subgroup");
  return elements_[it->second].label;
}

Point Subgroup::evaluate(std::string_view expr) const {
  Point acc = curve_->zero();
  size_t i = 0;
  auto skip = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  skip();
  if (expr.substr(i) == "0" || expr.substr(i) == "O") return acc;
  bool first = true;
  while (i < expr.size()) {
    int sign = 1;
    skip();
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("Subgroup::evaluate: expected sign in " + std::string(expr));
    }
    long m = 1;
    size_t start = i;
    while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
    if (i > start) m = std::stol(std::string(expr.substr(start, i - start)));
    // Longest generator name matching here (so Q'' beats Q' beats Q).
    size_t best = gens_.size(), best_len = 0;
    for (size_t g = 0; g < gens_.size(); ++g) {
      const std::string& n = gens_[g].first;
      if (n.size() > best_len && expr.substr(i, n.size()) == n) {
        best = g;
        best_len = n.size();
      }
    }
    if (best == gens_.size()) throw std::invalid_argument("Subgroup::evaluate: unknown term in " + std::string(expr));
    i += best_len;
    acc += gens_[best].second.times(sign * m);
    first = false;
    skip();
  }
  return acc;
}

}  // namespace boyd14::curves
