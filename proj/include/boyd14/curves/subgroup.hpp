#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "boyd14/curves/curve.hpp"

namespace boyd14::curves {

struct LabeledPoint {
  Point point;
  std::string label;
};

// Finite subgroup spanned by named generators, each element labelled by the
// simplest combination reaching it: fewest nonzero generator terms first,
// then the lexicographically smallest multiplier tuple. Labels look like
// "3A+Q'", "P+Q", "0".
class Subgroup {
 public:
  explicit Subgroup(std::vector<std::pair<std::string, Point>> generators, int order_bound = 64);

  const std::vector<LabeledPoint>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  bool contains(const Point& p) const { return index_.count(p.to_string()) != 0; }
  // Canonical label; throws if p is not in the group.
  const std::string& label(const Point& p) const;
  // Evaluates any combination such as "7A", "-P", "2P-Q", "A+Q''".
  Point evaluate(std::string_view expr) const;
  const CurvePtr& curve() const { return curve_; }
  const std::vector<std::pair<std::string, Point>>& generators() const { return gens_; }

 private:
  CurvePtr curve_;
  std::vector<std::pair<std::string, Point>> gens_;
  std::vector<LabeledPoint> elements_;
  std::unordered_map<std::string, size_t> index_;
};

// Label from multipliers aligned with the generator names.
std::string combination_label(const std::vector<std::string>& names, const std::vector<int>& mult);

}  // namespace boyd14::curves
