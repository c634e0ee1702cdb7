#pragma once

#include <stdexcept>
#include <string>

#include "boyd14/linesearch/certificate.hpp"
#include "boyd14/pipeline/compute.hpp"
#include "boyd14/pipeline/report.hpp"

namespace boyd14::pipeline {

struct Settings {
  unsigned digits = 30;         // L-value and dilogarithm routes
  unsigned mahler_digits = 12;  // quadrature
  const Cache* cache = nullptr;
};

// Tolerance for identities that hold exactly: 1e-20 at 30 digits.
double exact_tolerance(unsigned digits);

// Raised when a stage cannot produce a value at all; tolerance misses are
// reported in the Report instead.
struct StageError : std::runtime_error {
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage(std::move(stage)) {}
  std::string stage;
};

struct Conjecture {
  int id;
  curves::Family family;
  long k;
  mpq_class l_coefficient;      // m = c L(f14, 2) / pi^2
  mpq_class route_coefficient;  // m = c R_{E_g(1)}(P) / pi
  const char* name;             // "n(-1)"
};
const std::vector<Conjecture>& conjectures();
const Conjecture& conjecture(int id);

// Deninger's formula on the family curve itself:
// n(k) = -9 c_k / (2 pi) R([P] + [P+Q] + [P-Q]), g(k) = 3 c_k / pi R([P+Q] - [P]).
Real deninger_value(curves::Family family, long k, unsigned bits, const Cache* cache = nullptr);

// Three routes to m(P): quadrature, Deninger's formula with the isogeny
// reductions to R_{E_g(1)}(P), and the L-value; all pairwise differences.
Report run_conjecture(int id, const Settings& s);

// R_{E_g(1)}(P) = 7/(9 pi) L(f, 2), R_{E_g(7)}([P+Q] - [P]) = 7/pi L(f, 2),
// the bridge through E_g(1) over Q(zeta7), and an exact replay of the
// certificate for the bridge.
Report run_keystone(const Settings& s);

// The certificate that -([A]+[4A]+[7A]) + [A+Q]+[4A+Q]+[7A+Q] - 3[3A] lies in
// the kernel of R on E_g(1) over Q(zeta7), from the parallel-line search.
linesearch::CertificatePtr bridge_certificate();

}  // namespace boyd14::pipeline
