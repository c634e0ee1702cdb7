#include <cctype>
#include <sstream>

#include "boyd14/mahler/measure.hpp"

namespace boyd14::mahler {

using exact::QPoly;

BivariatePoly BivariatePoly::constant(const mpq_class& c) {
  BivariatePoly p;
  p.add(0, 0, c);
  return p;
}

BivariatePoly BivariatePoly::y() {
  BivariatePoly p;
  p.add(1, 0, 1);
  return p;
}

BivariatePoly BivariatePoly::z() {
  BivariatePoly p;
  p.add(0, 1, 1);
  return p;
}

mpq_class BivariatePoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void BivariatePoly::add(int i, int j, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(Exponent{i, j}, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& b) {
  for (auto& [e, c] : b.terms_) add(e.first, e.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& b) {
  for (auto& [e, c] : b.terms_) add(e.first, e.second, -c);
  return *this;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& b) const {
  BivariatePoly r;
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : b.terms_) r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BivariatePoly BivariatePoly::operator*(const mpq_class& c) const {
  BivariatePoly r;
  for (auto& [e, v] : terms_) r.add(e.first, e.second, v * c);
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned n) const {
  BivariatePoly r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

BivariatePoly BivariatePoly::swap_variables() const {
  BivariatePoly r;
  for (auto& [e, c] : terms_) r.add(e.second, e.first, c);
  return r;
}

BivariatePoly BivariatePoly::invert_y() const {
  BivariatePoly r;
  for (auto& [e, c] : terms_) r.add(-e.first, e.second, c);
  return r;
}

BivariatePoly BivariatePoly::normalized() const {
  if (terms_.empty()) return *this;
  int my = terms_.begin()->first.first, mz = terms_.begin()->first.second;
  for (auto& [e, c] : terms_) {
    my = std::min(my, e.first);
    mz = std::min(mz, e.second);
  }
  BivariatePoly r;
  for (auto& [e, c] : terms_) r.add(e.first - my, e.second - mz, c);
  return r;
}

std::vector<QPoly> BivariatePoly::coefficients_in_z() const {
  int dz = -1;
  for (auto& [e, c] : terms_) {
    if (e.first < 0 || e.second < 0) throw std::invalid_argument("coefficients_in_z: normalize first");
    dz = std::max(dz, e.second);
  }
  std::vector<std::vector<mpq_class>> raw(static_cast<size_t>(dz + 1));
  for (auto& [e, c] : terms_) {
    auto& v = raw[static_cast<size_t>(e.second)];
    if (v.size() <= static_cast<size_t>(e.first)) v.resize(static_cast<size_t>(e.first) + 1);
    v[static_cast<size_t>(e.first)] = c;
  }
  std::vector<QPoly> out;
  for (auto& v : raw) out.emplace_back(v);
  return out;
}

BivariatePoly BivariatePoly::from_coefficients_in_z(const std::vector<QPoly>& a) {
  BivariatePoly r;
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < a[j].coeffs().size(); ++i) r.add(static_cast<int>(i), static_cast<int>(j), a[j][i]);
  return r;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads most naturally.
  std::vector<std::pair<Exponent, mpq_class>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.first + a.first.second > b.first.first + b.first.second;
  });
  for (auto& [e, c] : sorted) {
    mpq_class m = abs(c);
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    first = false;
    bool mono = e.first != 0 || e.second != 0;
    if (m != 1 || !mono) os << m.get_str() << (mono ? "*" : "");
    auto var = [&](char v, int d, bool need_star) {
      if (d == 0) return;
      if (need_star) os << "*";
      os << v;
      if (d != 1) os << "^" << d;
    };
    var('y', e.first, false);
    var('z', e.second, e.first != 0);
  }
  return os.str();
}

nlohmann::json BivariatePoly::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (auto& [e, c] : terms_) a.push_back({{"y", e.first}, {"z", e.second}, {"c", c.get_str()}});
  return a;
}

BivariatePoly BivariatePoly::from_json(const nlohmann::json& j) {
  BivariatePoly p;
  for (auto& t : j) {
    mpq_class c;
    if (t.at("c").is_string()) c = mpq_class(t.at("c").get<std::string>());
    else c = mpq_class(t.at("c").get<long>());
    c.canonicalize();
    p.add(t.value("y", 0), t.value("z", 0), c);
  }
  return p;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BivariatePoly parse() {
    BivariatePoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BivariatePoly expr() {
    BivariatePoly r;
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    BivariatePoly t = term();
    r = neg ? -t : t;
    while (peek() == '+' || peek() == '-') {
      bool minus = s_[pos_++] == '-';
      BivariatePoly u = term();
      r = minus ? r - u : r + u;
    }
    return r;
  }

  BivariatePoly term() {
    BivariatePoly r = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * power();
      } else if (c == '/') {
        ++pos_;
        BivariatePoly d = power();
        if (d.terms().size() != 1 || d.terms().begin()->first != BivariatePoly::Exponent{0, 0})
          fail("division by a non-constant");
        r = r * (1 / d.terms().begin()->second);
      } else if (c == '(' || c == 'y' || c == 'z' || std::isdigit(static_cast<unsigned char>(c))) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  BivariatePoly power() {
    BivariatePoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (!neg) return base.pow(static_cast<unsigned>(e));
    if (base.terms().size() != 1 || base.terms().begin()->second != 1) fail("negative power of a non-monomial");
    auto [ex, c] = *base.terms().begin();
    BivariatePoly r;
    r.add(-ex.first * e, -ex.second * e, 1);
    return r;
  }

  BivariatePoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BivariatePoly r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'y') {
      ++pos_;
      return BivariatePoly::y();
    }
    if (c == 'z') {
      ++pos_;
      return BivariatePoly::z();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BivariatePoly::constant(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

BivariatePoly BivariatePoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace boyd14::mahler
