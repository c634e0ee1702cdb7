#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "boyd14/curves/subgroup.hpp"

namespace boyd14::linesearch {

using curves::Point;
using curves::Scalar;
using curves::Subgroup;

// Unordered {p, q, r} of nonzero points of Z with p + q + r = 0. Entries are
// indices into Z.elements(), sorted, so repeated points sit side by side.
struct Triple {
  std::array<size_t, 3> idx;
  bool tangent() const { return idx[0] == idx[1] || idx[1] == idx[2]; }
  bool inflection() const { return idx[0] == idx[2]; }
  friend bool operator==(const Triple& a, const Triple& b) { return a.idx == b.idx; }
  friend bool operator<(const Triple& a, const Triple& b) { return a.idx < b.idx; }
};

// "(A, A+Q', 7A+Q')" with subgroup labels.
std::string triple_label(const Subgroup& z, const Triple& t);
std::array<Point, 3> triple_points(const Subgroup& z, const Triple& t);

// Every triple, in lexicographic order of indices.
std::vector<Triple> triples(const Subgroup& z);

// y + s x + t = 0 in the short model y^2 = x^3 + a x + b of Z's curve
// (x = X + b2/12, y = Y + (a1 X + a3)/2, differential dx/2y).
struct Line {
  Scalar s;
  Scalar t;
};
Line line_of(const Subgroup& z, const Triple& t);

struct ZMapError : std::logic_error {
  using std::logic_error::logic_error;
};

// p -> z_p keyed by element index, from n_p z_p = sum_{k=1}^{n_p-2} s_{p,kp,-(k+1)p}.
// Checks z_{-p} = -z_p, z_p + z_q + z_r = s and x_p + x_q + x_r = s^2 on
// every triple; throws ZMapError otherwise.
std::map<size_t, Scalar> z_map(const Subgroup& z);

struct ParallelPair {
  Triple first;
  Triple second;
  Scalar slope;
};

// All unordered pairs of distinct triples with equal slopes.
std::vector<ParallelPair> parallel_pairs(const Subgroup& z);

// Breadth-first search over a one-parameter family: Z lives on a curve over
// Q(k). For each pair of triples, the rational k where the slopes agree.
struct Coincidence {
  Triple first;
  Triple second;
  mpq_class k;
};
std::vector<Coincidence> slope_coincidences(const Subgroup& z);

}  // namespace boyd14::linesearch
