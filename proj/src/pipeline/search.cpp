#include "boyd14/pipeline/search.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

#include "boyd14/curves/isogeny.hpp"
#include "boyd14/edilog/rfunction.hpp"
#include "boyd14/linesearch/certificate.hpp"
#include "boyd14/pipeline/compute.hpp"
#include "boyd14/pipeline/verify.hpp"

namespace boyd14::pipeline {

using curves::Curve;
using curves::Subgroup;
using exact::Field;
using exact::FieldPtr;
using exact::Scalar;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "y^2=x^3+1" and friends: the right side read as a monic cubic in x.
CurvePtr parse_equation(const std::string& text, const FieldPtr& field) {
  auto eq = text.find('=');
  std::string lhs = text.substr(0, eq), rhs = text.substr(eq + 1);
  std::erase(lhs, ' ');
  if (lhs != "y^2") throw std::invalid_argument("curve equation must read y^2 = cubic in x");
  Scalar f = exact::parse_scalar(rhs, Field::rational_functions("x"));
  const auto& c = f.num().coeffs();
  if (f.den().coeffs().size() != 1 || c.size() != 4 || c[3] != 1)
    throw std::invalid_argument("curve equation must have a monic cubic right side");
  auto q = [&](int i) { return Scalar(field, c[i]); };
  Scalar zero(field, mpq_class(0));
  return Curve::weierstrass(zero, q(2), zero, q(1), q(0));
}

CurvePtr parse_any_curve(const std::string& text, const FieldPtr& field) {
  if (text.find('=') != std::string::npos) return parse_equation(text, field);
  return curves::parse_curve(text, field)->over(field);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '\'') return false;
  return true;
}

struct Generators {
  std::vector<std::pair<std::string, Point>> list;
  std::vector<std::string> notes;
};

Generators build_generators(const CurvePtr& e, const std::string& spec) {
  static const char* pool[] = {"p", "r", "s", "u", "v", "w"};
  size_t next = 0;
  Generators g;
  auto contained = [&](const Point& p) {
    if (p.is_zero()) return true;
    if (g.list.empty()) return false;
    return Subgroup(g.list).contains(p);
  };
  auto fresh = [&]() -> std::string {
    if (next >= std::size(pool)) throw std::invalid_argument("too many generators");
    return pool[next++];
  };
  for (auto& tok : split(spec, ',')) {
    if (tok == "2tors" || tok == "3tors" || tok == "4tors") {
      int n = tok[0] - '0';
      auto pts = curves::ntors(e, n);
      // Named points first, so 2-torsion reads Q, Q' rather than Q'', Q.
      for (const char* cand : {"Q", "Q'", "Q''", "P"}) {
        std::optional<Point> p;
        try {
          p = e->named(cand);
        } catch (const std::exception&) {
          continue;
        }
        if (std::find(pts.begin(), pts.end(), *p) == pts.end() || contained(*p)) continue;
        g.notes.push_back(std::string(cand) + " = " + p->to_string());
        g.list.emplace_back(cand, *p);
      }
      for (auto& p : pts) {
        if (contained(p)) continue;
        std::string name = fresh();
        g.notes.push_back(name + " = " + p.to_string());
        g.list.emplace_back(name, p);
      }
      continue;
    }
    Point p = parse_point(e, tok);
    if (contained(p)) continue;
    std::string name = is_identifier(tok) ? tok : fresh();
    if (name != tok) g.notes.push_back(name + " = " + tok);
    g.list.emplace_back(name, p);
  }
  if (g.list.empty()) throw std::invalid_argument("group spec '" + spec + "' generates the trivial group");
  return g;
}

nlohmann::json slope_json(const Scalar& s) { return s.to_string(); }

}  // namespace

Report run_search(const SearchRequest& req) {
  auto t0 = std::chrono::steady_clock::now();
  using namespace linesearch;
  FieldPtr field = parse_field(req.field);
  CurvePtr e = parse_any_curve(req.curve, field);
  Generators gens = build_generators(e, req.group);
  Subgroup z(gens.list);

  Report r;
  r.command = "search";
  r.subject = req.curve + " / <" + req.group + "> / " + req.field;
  r.digits = req.digits;

  auto ts = triples(z);
  nlohmann::json res;
  res["curve"] = e->descriptor();
  res["field"] = field->name();
  res["generators"] = gens.notes;
  res["order"] = z.size();
  nlohmann::json tj = nlohmann::json::array();
  for (auto& t : ts) tj.push_back({{"triple", triple_label(z, t)}, {"slope", slope_json(line_of(z, t).s)}});
  res["triples"] = tj;

  try {
    auto zm = z_map(z);
    nlohmann::json zj = nlohmann::json::object();
    for (auto& [i, v] : zm) zj[z.elements()[i].label] = v.to_string();
    res["z"] = zj;
    r.exact.push_back({"z-map", true, "odd, additive on triples, x_p + x_q + x_r = s^2"});
  } catch (const ZMapError& err) {
    r.exact.push_back({"z-map", false, err.what()});
  }

  // Slopes are taken in the short model; slope_model is the same line in
  // the coordinates of the curve as given.
  Scalar shift = curves::to_short_weierstrass(e).slope_shift();
  auto pairs = parallel_pairs(z);
  nlohmann::json pj = nlohmann::json::array();
  for (auto& p : pairs)
    pj.push_back({{"first", triple_label(z, p.first)},
                  {"second", triple_label(z, p.second)},
                  {"slope", slope_json(p.slope)},
                  {"slope_model", slope_json(p.slope - shift)}});
  res["pairs"] = pj;

  if (field->kind() == Field::Kind::rational_functions) {
    Scalar disc = e->discriminant();
    nlohmann::json cj = nlohmann::json::array();
    std::set<mpq_class> special;
    for (auto& c : slope_coincidences(z)) {
      bool singular = disc.num().eval(c.k) == 0 || disc.den().eval(c.k) == 0;
      if (!singular) special.insert(c.k);
      cj.push_back({{"first", triple_label(z, c.first)},
                    {"second", triple_label(z, c.second)},
                    {"k", c.k.get_str()},
                    {"singular", singular}});
    }
    res["coincidences"] = cj;
    nlohmann::json sk = nlohmann::json::array();
    for (auto& k : special) sk.push_back(k.get_str());
    res["special_k"] = sk;
  } else {
    unsigned bits = bits_for_digits(req.digits);
    double tol = exact_tolerance(req.digits + 5);
    for (size_t i = 0; i < pairs.size(); ++i) {
      auto cert = relation_divisor(z, pairs[i]);
      auto j = to_json(*cert, &z);
      j["pair"] = i;
      r.certificates.push_back(j);
      if (!req.evaluate || cert->divisor.is_zero()) continue;
      edilog::DivisorOptions o;
      o.require_real = false;
      auto v = edilog::r_divisor_value(cert->divisor, bits, o);
      Real mag = numerics::abs(v.value);
      r.checks.push_back({"R vanishes on pair " + std::to_string(i), "|R(" + cert->divisor.to_string(&z) + ")|", "0",
                          mag, Real(0L, bits), tol, false});
    }
  }
  r.precision = {{"real_bits", bits_for_digits(req.digits)}};
  r.extra = res;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace boyd14::pipeline
