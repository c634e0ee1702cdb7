#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "boyd14/divisors/divisor.hpp"
#include "boyd14/linesearch/lines.hpp"

namespace boyd14::linesearch {

using divisors::Divisor;

// A divisor on which R vanishes, with enough provenance to rebuild it.
struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

struct Certificate {
  enum class Kind { parallel_pair, mult2, trace, combination };
  Kind kind;
  Divisor divisor;
  // parallel_pair: the two lines' points (short-model slopes agree).
  std::vector<std::array<Point, 3>> lines;
  // mult2: the point p.
  std::optional<Point> point;
  // combination: divisor = sum weights[i] * parents[i] away from 2-torsion.
  std::vector<mpq_class> weights;
  std::vector<CertificatePtr> parents;
};

const char* kind_name(Certificate::Kind k);

struct IdenticalTriples : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MissingTorsion : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ([p]+[q]+[r]-3[0]) * ([-p']+[-q']+[-r']-3[0]) for a parallel pair.
CertificatePtr relation_divisor(const Subgroup& z, const ParallelPair& pair);
// -[2p] + 2 sum_{r in E[2]} [p + r]. Needs the full 2-torsion over the field.
CertificatePtr mult2_relation(const curves::CurvePtr& curve, const Point& p);
// Sum of the Galois conjugates (coordinates over Q(zeta_n), curve over Q).
CertificatePtr galois_trace(const CertificatePtr& c);
Divisor galois_trace(const Divisor& d);

struct NotInSpan : std::runtime_error {
  NotInSpan(const std::string& what, std::vector<std::string> support)
      : std::runtime_error(what), support(std::move(support)) {}
  std::vector<std::string> support;  // residual points, as coordinates
};

// Rational w with sum w_i D_i = target. Points of order 2 are ignored: R
// vanishes there and their coefficients only live mod 2.
std::vector<mpq_class> eliminate(const std::vector<CertificatePtr>& certs, const Divisor& target);
// Target certified as the combination found by eliminate.
CertificatePtr combine(const std::vector<CertificatePtr>& certs, const Divisor& target);

// Rebuilds the divisor from provenance alone and compares.
bool replay(const Certificate& c);

nlohmann::json to_json(const Certificate& c, const Subgroup* labels = nullptr);
CertificatePtr certificate_from_json(const nlohmann::json& j, const curves::CurvePtr& curve);

// D as sum c_i Tr[p_i] for a Galois-stable D, with p_i the simplest label
// in each orbit; throws std::invalid_argument if D is not a sum of traces.
std::vector<std::pair<mpq_class, std::string>> trace_decomposition(const Divisor& d, const Subgroup& z);
// "-7Tr[A] + 2Tr[A+Q] - 4Tr[A+Q'] + 2Tr[3A+Q']".
std::string trace_string(const Divisor& d, const Subgroup& z);

}  // namespace boyd14::linesearch
