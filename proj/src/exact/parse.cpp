#include <cctype>

#include "boyd14/exact/field.hpp"

namespace boyd14::exact {

namespace {

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := unary (('*'|'/') unary | unary)*     juxtaposition multiplies
// unary := '-' unary | power
// power := atom ('^' ['-'] integer)?
// atom := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, FieldPtr field) : s_(text), field_(std::move(field)) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_scalar: " + why + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Scalar expr() {
    Scalar acc(field_, mpq_class(0));
    bool first = true;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Scalar t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else if (first) {
        acc = term();
      } else {
        break;
      }
      first = false;
    }
    return acc;
  }

  bool starts_atom(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        acc = acc / unary();
      } else if (starts_atom(c)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return pow(base, neg ? -e : e);
  }

  Scalar atom() {
    char c = peek();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(field_, mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (field_->kind() != Field::Kind::rationals && id == field_->var()) return Scalar::generator(field_);
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  FieldPtr field_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldPtr& field) { return Parser(text, field).run(); }

FieldPtr parse_field(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view t = trim(text);
  if (t == "Q" || t == "QQ") return Field::rationals();
  if (t.size() > 3 && t.substr(0, 2) == "Q(" && t.back() == ')') {
    std::string_view inner = trim(t.substr(2, t.size() - 3));
    if (inner.substr(0, 4) == "zeta") {
      unsigned n = static_cast<unsigned>(std::stoul(std::string(inner.substr(4))));
      return Field::cyclotomic(n, "g");
    }
    bool ident = !inner.empty() && std::isalpha(static_cast<unsigned char>(inner[0]));
    for (char c : inner) ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (ident) return Field::rational_functions(std::string(inner));
  }
  if (t.size() > 6 && t.substr(0, 2) == "Q[") {
    size_t close = t.find(']');
    if (close != std::string_view::npos && t.substr(close, 3) == "]/(" && t.back() == ')') {
      std::string var(t.substr(2, close - 2));
      Scalar m = parse_scalar(t.substr(close + 3, t.size() - close - 4), Field::rational_functions(var));
      return Field::quotient(m.num(), var);
    }
  }
  throw std::invalid_argument("parse_field: unrecognised field \"" + std::string(text) + "\"");
}

}  // namespace boyd14::exact
