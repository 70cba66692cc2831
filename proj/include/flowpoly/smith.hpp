#pragma once

#include "flowpoly/numeric.hpp"

#include <cstddef>
#include <vector>

namespace flowpoly {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form,
/// all positive. Their count is the rank. Rows may be ragged only if empty.
std::vector<BigInt> smith_invariant_factors(IntMatrix m);

std::size_t integer_rank(const IntMatrix& m);

} // namespace flowpoly
