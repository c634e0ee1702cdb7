#include "boyd14/linesearch/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "boyd14/curves/isogeny.hpp"
#include "boyd14/curves/json.hpp"
#include "boyd14/divisors/json.hpp"

namespace boyd14::linesearch {

using curves::CurvePtr;
using divisors::FormalSum;

namespace {

// Rational combination of classes in Z[E]^-, keyed like Divisor::terms().
using RMap = std::map<std::string, std::pair<Point, mpq_class>>;

bool two_torsion(const Point& p) { return !p.is_zero() && (-p) == p; }

void accumulate(RMap& m, const Divisor& d, const mpq_class& w) {
  for (auto& [key, t] : d.terms()) {
    if (two_torsion(t.point)) continue;
    auto [it, fresh] = m.emplace(key, std::make_pair(t.point, mpq_class(0)));
    it->second.second += w * t.coeff;
    if (it->second.second == 0) m.erase(it);
  }
}

std::vector<long> automorphisms(const exact::FieldPtr& f) {
  if (f->kind() == exact::Field::Kind::rationals) return {1};
  unsigned n = f->cyclotomic_order();
  if (!n) throw std::invalid_argument("galois_trace: field is not cyclotomic");
  std::vector<long> out;
  for (long e = 1; e < static_cast<long>(n); ++e)
    if (std::gcd(e, static_cast<long>(n)) == 1) out.push_back(e);
  return out;
}

Point conjugate(const Point& p, long e) {
  if (p.is_zero()) return p;
  return Point(p.curve(), p.x().galois(e), p.y().galois(e));
}

FormalSum line_sum(const CurvePtr& c, const std::array<Point, 3>& pts) {
  FormalSum s(c);
  for (auto& p : pts) s.add(p, 1);
  s.add(c->zero(), -3);
  return s;
}

// Slope in the short model of the line meeting E in the three points.
Scalar slope_of(const curves::ShortModel& m, const std::array<Point, 3>& pts) {
  Point p = m.to_short(pts[0]), q = m.to_short(pts[1]), r = m.to_short(pts[2]);
  const Point* d = nullptr;
  if (p == q || p == r) d = &p;
  else if (q == r) d = &q;
  if (d) return -(d->x() * d->x() * Scalar(3L) + m.target->a4()) / (d->y() * Scalar(2L));
  return -(q.y() - p.y()) / (q.x() - p.x());
}

Divisor mult2_divisor(const CurvePtr& curve, const Point& p) {
  std::vector<Point> halves{curve->zero()};
  for (auto& t : curves::ntors(curve, 2))
    if (!t.is_zero()) halves.push_back(t);
  if (halves.size() != 4) throw MissingTorsion("mult2_relation: the 2-torsion is not defined over " + curve->field()->name());
  FormalSum s(curve);
  s.add(p.times(2), -1);
  for (auto& r : halves) s.add(p + r, 2);
  return divisors::normalize(s);
}

int label_terms(const std::string& l) {
  int n = 1;
  for (size_t i = 1; i < l.size(); ++i)
    if (l[i] == '+' || l[i] == '-') ++n;
  return n;
}

}  // namespace

const char* kind_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::parallel_pair:
      return "parallel_pair";
    case Certificate::Kind::mult2:
      return "mult2";
    case Certificate::Kind::trace:
      return "trace";
    case Certificate::Kind::combination:
      return "combination";
  }
  return "?";
}

CertificatePtr relation_divisor(const Subgroup& z, const ParallelPair& pair) {
  if (pair.first == pair.second) throw IdenticalTriples("relation_divisor: the two triples coincide");
  auto a = triple_points(z, pair.first), b = triple_points(z, pair.second);
  const CurvePtr& c = z.curve();
  Certificate out{Certificate::Kind::parallel_pair, divisors::beta(line_sum(c, a), line_sum(c, b)), {a, b}, {}, {}, {}};
  return std::make_shared<const Certificate>(std::move(out));
}

CertificatePtr mult2_relation(const CurvePtr& curve, const Point& p) {
  Certificate out{Certificate::Kind::mult2, mult2_divisor(curve, p), {}, p, {}, {}};
  return std::make_shared<const Certificate>(std::move(out));
}

Divisor galois_trace(const Divisor& d) {
  const CurvePtr& c = d.curve();
  for (const Scalar* a : {&c->a1(), &c->a2(), &c->a3(), &c->a4(), &c->a6()})
    if (!a->is_rational()) throw std::invalid_argument("galois_trace: curve must be defined over Q");
  FormalSum s(c);
  for (long e : automorphisms(c->field()))
    for (auto& [key, t] : d.terms()) s.add(conjugate(t.point, e), t.coeff);
  return divisors::normalize(s);
}

CertificatePtr galois_trace(const CertificatePtr& c) {
  Certificate out{Certificate::Kind::trace, galois_trace(c->divisor), {}, {}, {}, {c}};
  return std::make_shared<const Certificate>(std::move(out));
}

std::vector<mpq_class> eliminate(const std::vector<CertificatePtr>& certs, const Divisor& target) {
  // Rows are point classes, columns the certificates, plus the target.
  std::map<std::string, size_t> row_of;
  std::vector<std::string> row_name;
  auto collect = [&](const Divisor& d) {
    for (auto& [key, t] : d.terms())
      if (!two_torsion(t.point) && row_of.emplace(key, row_name.size()).second) row_name.push_back(t.point.to_string());
  };
  for (auto& c : certs) {
    if (!(*c->divisor.curve() == *target.curve())) throw std::invalid_argument("eliminate: certificates live on another curve");
    collect(c->divisor);
  }
  collect(target);
  const size_t n = certs.size(), m = row_name.size();
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1, 0));
  auto fill = [&](const Divisor& d, size_t col) {
    for (auto& [key, t] : d.terms())
      if (!two_torsion(t.point)) a[row_of.at(key)][col] = t.coeff;
  };
  for (size_t j = 0; j < n; ++j) fill(certs[j]->divisor, j);
  fill(target, n);

  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<mpq_class> w(n, 0);
  for (size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = a[i][n];

  RMap residual;
  accumulate(residual, target, 1);
  for (size_t j = 0; j < n; ++j) accumulate(residual, certs[j]->divisor, -w[j]);
  if (!residual.empty()) {
    std::vector<std::string> support;
    for (auto& [key, v] : residual) support.push_back(v.first.to_string());
    throw NotInSpan("eliminate: target is not in the span (" + std::to_string(support.size()) + " residual points)",
                    std::move(support));
  }
  return w;
}

CertificatePtr combine(const std::vector<CertificatePtr>& certs, const Divisor& target) {
  Certificate out{Certificate::Kind::combination, target, {}, {}, eliminate(certs, target), certs};
  return std::make_shared<const Certificate>(std::move(out));
}

bool replay(const Certificate& c) {
  const CurvePtr& curve = c.divisor.curve();
  switch (c.kind) {
    case Certificate::Kind::parallel_pair: {
      if (c.lines.size() != 2) return false;
      auto model = curves::to_short_weierstrass(curve);
      for (auto& l : c.lines)
        if (!(l[0] + l[1] + l[2]).is_zero() || l[0].is_zero() || l[1].is_zero() || l[2].is_zero()) return false;
      if (slope_of(model, c.lines[0]) != slope_of(model, c.lines[1])) return false;
      return divisors::beta(line_sum(curve, c.lines[0]), line_sum(curve, c.lines[1])) == c.divisor;
    }
    case Certificate::Kind::mult2:
      return c.point && mult2_divisor(curve, *c.point) == c.divisor;
    case Certificate::Kind::trace:
      return c.parents.size() == 1 && replay(*c.parents[0]) && galois_trace(c.parents[0]->divisor) == c.divisor;
    case Certificate::Kind::combination: {
      if (c.parents.size() != c.weights.size()) return false;
      RMap r;
      accumulate(r, c.divisor, 1);
      for (size_t i = 0; i < c.parents.size(); ++i) {
        if (!replay(*c.parents[i])) return false;
        accumulate(r, c.parents[i]->divisor, -c.weights[i]);
      }
      return r.empty();
    }
  }
  return false;
}

nlohmann::json to_json(const Certificate& c, const Subgroup* labels) {
  nlohmann::json j{{"kind", kind_name(c.kind)}, {"divisor", divisors::to_json(c.divisor, labels)}};
  if (!c.lines.empty()) {
    nlohmann::json ls = nlohmann::json::array();
    for (auto& l : c.lines) {
      nlohmann::json pts = nlohmann::json::array();
      for (auto& p : l) pts.push_back(curves::point_to_json(p));
      ls.push_back(pts);
    }
    j["lines"] = ls;
  }
  if (c.point) j["point"] = curves::point_to_json(*c.point);
  if (!c.weights.empty()) {
    nlohmann::json w = nlohmann::json::array();
    for (auto& x : c.weights) w.push_back(x.get_str());
    j["weights"] = w;
  }
  if (!c.parents.empty()) {
    nlohmann::json ps = nlohmann::json::array();
    for (auto& p : c.parents) ps.push_back(to_json(*p, labels));
    j["parents"] = ps;
  }
  return j;
}

CertificatePtr certificate_from_json(const nlohmann::json& j, const CurvePtr& curve) {
  const std::string kind = j.at("kind").get<std::string>();
  Certificate c{Certificate::Kind::parallel_pair, divisors::divisor_from_json(j.at("divisor"), curve), {}, {}, {}, {}};
  if (kind == "parallel_pair") c.kind = Certificate::Kind::parallel_pair;
  else if (kind == "mult2") c.kind = Certificate::Kind::mult2;
  else if (kind == "trace") c.kind = Certificate::Kind::trace;
  else if (kind == "combination") c.kind = Certificate::Kind::combination;
  else throw std::invalid_argument("certificate_from_json: unknown kind " + kind);
  if (j.contains("lines"))
    for (auto& l : j.at("lines")) {
      std::array<Point, 3> pts;
      for (size_t i = 0; i < 3; ++i) pts[i] = curves::point_from_json(l.at(i), curve);
      c.lines.push_back(pts);
    }
  if (j.contains("point")) c.point = curves::point_from_json(j.at("point"), curve);
  if (j.contains("weights"))
    for (auto& w : j.at("weights")) {
      mpq_class q(w.get<std::string>());
      q.canonicalize();
      c.weights.push_back(q);
    }
  if (j.contains("parents"))
    for (auto& p : j.at("parents")) c.parents.push_back(certificate_from_json(p, curve));
  return std::make_shared<const Certificate>(std::move(c));
}

std::vector<std::pair<mpq_class, std::string>> trace_decomposition(const Divisor& d, const Subgroup& z) {
  const auto autos = automorphisms(d.curve()->field());
  RMap rest;
  accumulate(rest, d, 1);
  std::vector<std::pair<mpq_class, std::string>> out;
  while (!rest.empty()) {
    const Point seed = rest.begin()->second.first;
    // Simplest label among the conjugates and their negatives.
    std::optional<Point> rep;
    std::string best;
    for (long e : autos)
      for (const Point& q : {conjugate(seed, e), -conjugate(seed, e)}) {
        if (!z.contains(q)) continue;
        const std::string& l = z.label(q);
        auto key = [](const std::string& s) { return std::make_tuple(label_terms(s), s.size(), s); };
        if (!rep || key(l) < key(best)) {
          rep = q;
          best = l;
        }
      }
    if (!rep) throw std::invalid_argument("trace_decomposition: orbit of " + seed.to_string() + " leaves the subgroup");
    Divisor t = galois_trace(divisors::make_divisor(d.curve(), {{1, *rep}}));
    long tc = t.coeff(*rep);
    if (tc == 0) throw std::invalid_argument("trace_decomposition: Tr[" + best + "] vanishes");
    auto it = rest.find(divisors::make_divisor(d.curve(), {{1, *rep}}).terms().begin()->first);
    if (it == rest.end()) throw std::invalid_argument("trace_decomposition: divisor is not Galois stable");
    mpq_class have = it->second.second;
    // rest stores the canonical representative; align with rep's sign.
    if (!(it->second.first == *rep)) have = -have;
    mpq_class c = have / tc;
    accumulate(rest, t, -c);
    out.emplace_back(c, best);
  }
  // A, A+Q, A+Q', 3A+Q': by term count, then the label less its leading
  // multiplier, then that multiplier.
  auto order = [](const std::string& l) {
    size_t k = 0;
    while (k < l.size() && std::isdigit(static_cast<unsigned char>(l[k]))) ++k;
    return std::make_tuple(label_terms(l), l.substr(k), k ? std::stol(l.substr(0, k)) : 1L);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order(a.second) < order(b.second); });
  return out;
}

std::string trace_string(const Divisor& d, const Subgroup& z) {
  auto parts = trace_decomposition(d, z);
  if (parts.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& [c, l] = parts[i];
    mpq_class a = abs(c);
    s += i == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (a != 1) s += a.get_str();
    s += "Tr[" + l + "]";
  }
  return s;
}

}  // namespace boyd14::linesearch
