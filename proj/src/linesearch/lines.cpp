#include "boyd14/linesearch/lines.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "boyd14/exact/fpoly.hpp"

namespace boyd14::linesearch {

namespace {

using Index = std::unordered_map<std::string, size_t>;

Index index_of(const Subgroup& z) {
  Index ix;
  for (size_t i = 0; i < z.size(); ++i) ix.emplace(z.elements()[i].point.to_string(), i);
  return ix;
}

size_t lookup(const Index& ix, const Point& p) {
  auto it = ix.find(p.to_string());
  if (it == ix.end()) throw std::invalid_argument("linesearch: subgroup is not closed under addition");
  return it->second;
}

Triple make_triple(size_t a, size_t b, size_t c) {
  Triple t{{a, b, c}};
  std::sort(t.idx.begin(), t.idx.end());
  return t;
}

// Slope s of y + s x + t = 0 through the short-model points of a triple.
Line line_short(const Scalar& a, const Point& p, const Point& q, bool pq, bool qr) {
  Scalar m;
  const Point *u = &p, *v = &q;
  if (pq || qr) {
    const Point& d = pq ? p : q;
    u = &d;
    m = (d.x() * d.x() * Scalar(3L) + a) / (d.y() * Scalar(2L));
  } else {
    m = (v->y() - u->y()) / (v->x() - u->x());
  }
  Scalar c = u->y() - m * u->x();
  return {-m, -c};
}

}  // namespace

std::string triple_label(const Subgroup& z, const Triple& t) {
  return "(" + z.elements()[t.idx[0]].label + ", " + z.elements()[t.idx[1]].label + ", " +
         z.elements()[t.idx[2]].label + ")";
}

std::array<Point, 3> triple_points(const Subgroup& z, const Triple& t) {
  return {z.elements()[t.idx[0]].point, z.elements()[t.idx[1]].point, z.elements()[t.idx[2]].point};
}

std::vector<Triple> triples(const Subgroup& z) {
  Index ix = index_of(z);
  std::vector<Triple> out;
  const auto& el = z.elements();
  for (size_t i = 0; i < el.size(); ++i) {
    if (el[i].point.is_zero()) continue;
    for (size_t j = i; j < el.size(); ++j) {
      if (el[j].point.is_zero()) continue;
      Point r = -(el[i].point + el[j].point);
      if (r.is_zero()) continue;
      size_t k = lookup(ix, r);
      if (k < j) continue;
      out.push_back({{i, j, k}});
    }
  }
  return out;
}

Line line_of(const Subgroup& z, const Triple& t) {
  auto model = curves::to_short_weierstrass(z.curve());
  auto pts = triple_points(z, t);
  Point p = model.to_short(pts[0]), q = model.to_short(pts[1]);
  return line_short(model.target->a4(), p, q, t.idx[0] == t.idx[1], t.idx[1] == t.idx[2]);
}

std::map<size_t, Scalar> z_map(const Subgroup& z) {
  Index ix = index_of(z);
  auto model = curves::to_short_weierstrass(z.curve());
  std::map<std::array<size_t, 3>, Scalar> slope;
  auto ts = triples(z);
  for (auto& t : ts) slope.emplace(t.idx, line_of(z, t).s);

  const auto& el = z.elements();
  std::map<size_t, Scalar> out;
  for (size_t i = 0; i < el.size(); ++i) {
    const Point& p = el[i].point;
    if (p.is_zero()) continue;
    // Walk the multiples kp, accumulating s_{p, kp, -(k+1)p}.
    Scalar sum(z.curve()->field(), mpq_class(0));
    Point kp = p;
    long n = 1;
    while (!(kp + p).is_zero()) {
      Point next = kp + p;
      sum += slope.at(make_triple(i, lookup(ix, kp), lookup(ix, -next)).idx);
      kp = next;
      ++n;
    }
    out.emplace(i, sum / Scalar(n + 1));
  }

  for (size_t i = 0; i < el.size(); ++i) {
    if (el[i].point.is_zero()) continue;
    if (out.at(i) != -out.at(lookup(ix, -el[i].point)))
      throw ZMapError("z_map: z is not odd at " + el[i].label);
  }
  for (auto& t : ts) {
    const Scalar& s = slope.at(t.idx);
    if (out.at(t.idx[0]) + out.at(t.idx[1]) + out.at(t.idx[2]) != s)
      throw ZMapError("z_map: z_p + z_q + z_r != s at " + triple_label(z, t));
    Scalar xs = Scalar(z.curve()->field(), mpq_class(0));
    for (size_t k : t.idx) xs += model.to_short(el[k].point).x();
    if (xs != s * s) throw ZMapError("z_map: x_p + x_q + x_r != s^2 at " + triple_label(z, t));
  }
  return out;
}

std::vector<ParallelPair> parallel_pairs(const Subgroup& z) {
  auto ts = triples(z);
  std::vector<Line> lines;
  for (auto& t : ts) lines.push_back(line_of(z, t));
  // Bucket on the canonical text of s, then compare exactly.
  std::map<std::string, std::vector<size_t>> buckets;
  for (size_t i = 0; i < ts.size(); ++i) buckets[lines[i].s.to_string()].push_back(i);
  std::vector<ParallelPair> out;
  for (auto& [key, members] : buckets)
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        size_t i = members[a], j = members[b];
        if (lines[i].s == lines[j].s) out.push_back({ts[i], ts[j], lines[i].s});
      }
  std::sort(out.begin(), out.end(), [](const ParallelPair& x, const ParallelPair& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return out;
}

std::vector<Coincidence> slope_coincidences(const Subgroup& z) {
  const auto& field = z.curve()->field();
  if (field->kind() != exact::Field::Kind::rational_functions)
    throw std::invalid_argument("slope_coincidences: curve must be defined over Q(k)");
  auto ts = triples(z);
  std::vector<Scalar> s;
  for (auto& t : ts) s.push_back(line_of(z, t).s);
  std::vector<Coincidence> out;
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i + 1; j < ts.size(); ++j) {
      Scalar d = s[i] - s[j];
      if (d.is_zero()) continue;
      std::vector<Scalar> c;
      for (auto& q : d.num().coeffs()) c.emplace_back(q);
      auto roots = exact::roots_in_field(exact::FPoly(exact::Field::rationals(), c));
      for (auto& r : roots.roots) {
        mpq_class k = r.value.to_rational();
        if (d.den().eval(k) == 0) continue;
        out.push_back({ts[i], ts[j], k});
      }
    }
  return out;
}

}  // namespace boyd14::linesearch
