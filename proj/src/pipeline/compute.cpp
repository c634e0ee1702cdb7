#include "boyd14/pipeline/compute.hpp"

#include <cctype>

#include "boyd14/modforms/qseries.hpp"
#include "boyd14/pipeline/report.hpp"

namespace boyd14::pipeline {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

nlohmann::json real_json(const Real& x) { return {{"value", exact_decimal(x)}, {"bits", x.precision()}}; }

Real real_from(const nlohmann::json& j) { return Real(j["value"].get<std::string>(), j["bits"].get<unsigned>()); }

nlohmann::json mahler_json(const mahler::MahlerResult& r) {
  return {{"value", real_json(r.value)},
          {"error", real_json(r.error)},
          {"vanishes_on_torus", r.vanishes_on_torus},
          {"breakpoints", r.breakpoints}};
}

mahler::MahlerResult mahler_from(const nlohmann::json& j) {
  mahler::MahlerResult r;
  r.value = real_from(j["value"]);
  r.error = real_from(j["error"]);
  r.vanishes_on_torus = j["vanishes_on_torus"];
  r.breakpoints = j["breakpoints"].get<std::vector<double>>();
  return r;
}

}  // namespace

unsigned bits_for_digits(unsigned digits) { return static_cast<unsigned>(digits * 3.3219281 + 0.5) + 24; }

modforms::LValue l_from_coefficients(const std::vector<mpq_class>& a, long level, int s, unsigned bits) {
  return modforms::l_value(a, level, s, bits);
}

modforms::LValue l_f14(int s, unsigned bits, const Cache* cache) {
  std::string key = "lvalue-14-s" + std::to_string(s) + "-b" + std::to_string(bits);
  if (cache)
    if (auto j = cache->get(key))
      return {real_from((*j)["value"]), real_from((*j)["error"]), (*j)["root_number"], (*j)["terms"]};
  int need = modforms::l_value_terms(14, bits + 32);
  auto a = modforms::coefficient_list(modforms::newform_14(2 * need + 2));
  auto r = modforms::l_value(a, 14, s, bits);
  if (cache)
    cache->put(key, {{"value", real_json(r.value)},
                     {"error", real_json(r.error)},
                     {"root_number", r.root_number},
                     {"terms", r.terms}});
  return r;
}

mahler::MahlerResult family_m(curves::Family family, const mpq_class& k, unsigned digits, const Cache* cache) {
  std::string key = std::string("mahler-") + (family == curves::Family::n ? "n" : "g") + "-" + k.get_str() + "-d" +
                    std::to_string(digits);
  if (cache)
    if (auto j = cache->get(key)) return mahler_from(*j);
  auto r = mahler::family_measure(family, k, digits);
  if (cache) cache->put(key, mahler_json(r));
  return r;
}

mahler::MahlerResult poly_m(const mahler::BivariatePoly& p, unsigned digits, const Cache* cache) {
  std::string key = "mahler-" + p.to_string() + "-d" + std::to_string(digits);
  if (cache)
    if (auto j = cache->get(key)) return mahler_from(*j);
  auto r = mahler::mahler_measure(p, digits);
  if (cache) cache->put(key, mahler_json(r));
  return r;
}

Real r_value(const Divisor& d, unsigned bits, const Cache* cache, const edilog::DivisorOptions& opts) {
  const auto& c = d.curve();
  std::string key = "r-" + c->descriptor() + "-" + c->field()->name() + "-" + d.to_string() + "-" +
                    (opts.form == edilog::Form::du ? "du" : "omega") + "-" + opts.scale.get_str() + "-e" +
                    std::to_string(opts.embedding) + "-b" + std::to_string(bits);
  if (cache)
    if (auto j = cache->get(key)) return real_from(*j);
  Real v = edilog::r_divisor(d, bits, opts);
  if (cache) cache->put(key, real_json(v));
  return v;
}

exact::FieldPtr parse_field(std::string_view text) {
  std::string t = trim(text);
  if (t == "Q") return exact::Field::rationals();
  if (t == "Q(k)") return exact::Field::rational_functions("k");
  if (t == "Q(zeta3)") return exact::Field::cyclotomic(3, "w");
  if (t == "Q(zeta7)") return exact::Field::cyclotomic(7, "g");
  throw std::invalid_argument("unsupported field '" + t + "' (expected Q, Q(k), Q(zeta3) or Q(zeta7))");
}

Point parse_point(const CurvePtr& curve, std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("parse_point: empty point");
  if (t == "0" || t == "O") return curve->zero();
  if (t.front() == '(') {
    if (t.back() != ')') throw std::invalid_argument("parse_point: unbalanced '" + t + "'");
    std::string inner = t.substr(1, t.size() - 2);
    int depth = 0;
    for (size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        auto x = exact::parse_scalar(inner.substr(0, i), curve->field());
        auto y = exact::parse_scalar(inner.substr(i + 1), curve->field());
        return curve->point(x, y);
      }
    }
    throw std::invalid_argument("parse_point: expected (x,y): '" + t + "'");
  }
  // Signed multiples of named points: "4A+Q'", "-P", "2P-Q".
  Point sum = curve->zero();
  size_t i = 0;
  while (i < t.size()) {
    long sign = 1;
    while (i < t.size() && (t[i] == '+' || t[i] == '-' || t[i] == ' ')) {
      if (t[i] == '-') sign = -sign;
      ++i;
    }
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    long mult = i > start ? std::stol(t.substr(start, i - start)) : 1;
    start = i;
    while (i < t.size() && t[i] != '+' && t[i] != '-' && t[i] != ' ') ++i;
    std::string name = t.substr(start, i - start);
    if (name.empty()) throw std::invalid_argument("parse_point: missing name in '" + t + "'");
    sum += curve->named(name).times(sign * mult);
  }
  return sum;
}

Divisor parse_divisor(const CurvePtr& curve, std::string_view text) {
  divisors::FormalSum raw(curve);
  std::string t = trim(text);
  size_t i = 0;
  bool any = false;
  while (i < t.size()) {
    long sign = 1;
    while (i < t.size() && (t[i] == '+' || t[i] == '-' || t[i] == ' ')) {
      if (t[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= t.size()) break;
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    long c = i > start ? std::stol(t.substr(start, i - start)) : 1;
    while (i < t.size() && (t[i] == '*' || t[i] == ' ')) ++i;
    if (i >= t.size() || t[i] != '[') throw std::invalid_argument("parse_divisor: expected '[' in '" + t + "'");
    size_t close = t.find(']', i);
    if (close == std::string::npos) throw std::invalid_argument("parse_divisor: unclosed '[' in '" + t + "'");
    raw.add(parse_point(curve, std::string_view(t).substr(i + 1, close - i - 1)), sign * c);
    any = true;
    i = close + 1;
  }
  if (!any) throw std::invalid_argument("parse_divisor: no terms in '" + t + "'");
  return divisors::normalize(raw);
}

}  // namespace boyd14::pipeline
