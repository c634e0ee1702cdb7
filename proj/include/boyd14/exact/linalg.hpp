#pragma once

#include <optional>
#include <vector>

#include "boyd14/exact/field.hpp"

namespace boyd14::exact {

using Matrix = std::vector<std::vector<Scalar>>;

// Exact Gaussian elimination for A x = b (A may be rectangular). Returns one
// solution with free variables set to zero, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b);

// Rank of A over its field.
size_t rank(Matrix a);

}  // namespace boyd14::exact
