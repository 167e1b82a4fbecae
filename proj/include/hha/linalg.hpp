#pragma once

#include <optional>
#include <vector>

#include "hha/rational.hpp"

namespace hha {

using Mat = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

// Exact determinant by Bareiss fraction-free elimination.
Rat det_bareiss(Mat a);

// Exact solution of a x = b; nullopt when a is singular.
std::optional<Vec> solve_linear(Mat a, Vec b);

// A non-zero kernel vector of a square singular matrix; nullopt when a is
// non-singular.
std::optional<Vec> kernel_vector(Mat a);

}  // namespace hha
