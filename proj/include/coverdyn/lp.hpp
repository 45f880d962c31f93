#pragma once

#include "coverdyn/multicurve.hpp"

#include <optional>
#include <vector>

namespace coverdyn {

// Exact feasibility of  v >= 0, sum(v) = 1, B v >= v  for a nonnegative
// square B; returns a witness when feasible. For an irreducible B this holds
// exactly when the spectral radius is at least 1, which is how strong
// reduction systems are decided block by block.
std::optional<std::vector<Rat>> expansion_witness(const RatMatrix& b);

}  // namespace coverdyn
