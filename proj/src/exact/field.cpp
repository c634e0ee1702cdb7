#include <algorithm>
#include <map>
#include <numeric>

#include "boyd14/exact/field.hpp"
#include "boyd14/numerics/polyroots.hpp"

namespace boyd14::exact {

using numerics::Complex;
using numerics::Real;

namespace {

std::mutex registry_mutex;
std::map<std::string, FieldPtr> registry;

FieldPtr intern(Field::Kind kind, std::string var, QPoly modulus, unsigned cyclo) {
  std::string key = std::to_string(static_cast<int>(kind)) + "|" + var + "|" + modulus.to_string("t") + "|" +
                    std::to_string(cyclo);
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto f = std::make_shared<const Field>(kind, std::move(var), std::move(modulus), cyclo);
  registry.emplace(key, f);
  return f;
}

QPoly cyclotomic_poly(unsigned n) {
  QPoly p = QPoly::monomial(n) - QPoly(1L);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = p / cyclotomic_poly(d);
  return p;
}

}  // namespace

Field::Field(Kind kind, std::string var, QPoly modulus, unsigned cyclotomic_order)
    : kind_(kind), var_(std::move(var)), modulus_(std::move(modulus)), cyclotomic_order_(cyclotomic_order) {}

FieldPtr Field::rationals() {
  static const FieldPtr q = intern(Kind::rationals, "", QPoly(), 0);
  return q;
}

FieldPtr Field::rational_functions(std::string var) {
  return intern(Kind::rational_functions, std::move(var), QPoly(), 0);
}

FieldPtr Field::quotient(const QPoly& m, std::string var) {
  if (m.degree() < 1) throw std::invalid_argument("Field::quotient: modulus must have positive degree");
  QPoly mm = m.monic();
  if (gcd(mm, mm.derivative()).degree() > 0) throw std::invalid_argument("Field::quotient: modulus not squarefree");
  if (mm.degree() == 1) return rationals();
  return intern(Kind::quotient, std::move(var), std::move(mm), 0);
}

FieldPtr Field::cyclotomic(unsigned n, std::string var) {
  if (n < 3) return rationals();
  return intern(Kind::quotient, std::move(var), cyclotomic_poly(n), n);
}

unsigned Field::degree() const {
  switch (kind_) {
    case Kind::rationals:
      return 1;
    case Kind::rational_functions:
      return 0;
    case Kind::quotient:
      return static_cast<unsigned>(modulus_.degree());
  }
  return 0;
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::rationals:
      return "Q";
    case Kind::rational_functions:
      return "Q(" + var_ + ")";
    case Kind::quotient:
      if (cyclotomic_order_) return "Q(zeta" + std::to_string(cyclotomic_order_) + ")";
      return "Q[" + var_ + "]/(" + modulus_.to_string(var_) + ")";
  }
  return "?";
}

const std::vector<Complex>& Field::embeddings(unsigned bits) const {
  if (kind_ != Kind::quotient) throw std::domain_error("Field::embeddings: not a number field quotient");
  std::lock_guard lock(embed_mutex_);
  for (auto& [b, roots] : embed_cache_)
    if (b == bits) return *roots;
  std::vector<Complex> roots;
  if (cyclotomic_order_) {
    const unsigned n = cyclotomic_order_;
    Real two_pi = numerics::pi(bits + 16) * 2L;
    for (unsigned j = 1; j < n; ++j)
      if (std::gcd(j, n) == 1) roots.push_back(numerics::expi(two_pi * static_cast<long>(j) / static_cast<long>(n)));
  } else {
    std::vector<Complex> c;
    for (auto& q : modulus_.coeffs()) c.emplace_back(Real(q, bits + 16));
    roots = numerics::polyroots(c, bits + 16);
  }
  std::vector<std::pair<double, size_t>> order;
  for (size_t i = 0; i < roots.size(); ++i) {
    // Conjugate pairs on the real axis: treat arg(-x) as +pi so ordering is total.
    double a = numerics::arg(roots[i]).to_double();
    if (std::abs(roots[i].im.to_double()) < 1e-30 && roots[i].re.sign() < 0) a = M_PI;
    order.emplace_back(a, i);
  }
  std::sort(order.begin(), order.end());
  auto sorted = std::make_shared<std::vector<Complex>>();
  for (auto& [a, i] : order) sorted->push_back(roots[i].with_precision(bits));
  embed_cache_.emplace_back(bits, sorted);
  return *sorted;
}

unsigned Field::principal_embedding() const {
  if (!cyclotomic_order_) throw std::domain_error("Field::principal_embedding: not cyclotomic");
  // Sorted by argument in (-pi, pi]; the negative-argument roots come first.
  unsigned n = cyclotomic_order_, negatives = 0;
  for (unsigned j = 1; j < n; ++j)
    if (std::gcd(j, n) == 1 && 2 * j > n) ++negatives;
  return negatives;
}

FieldPtr join(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (a->kind() == Field::Kind::rationals) return b;
  if (b->kind() == Field::Kind::rationals) return a;
  throw FieldMismatch("field mismatch: " + a->name() + " vs " + b->name());
}

}  // namespace boyd14::exact
