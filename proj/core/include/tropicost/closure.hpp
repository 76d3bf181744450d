#pragma once

#include "tropicost/matrix.hpp"

namespace tropicost {

// Transitive closure: the join of all positive powers of m. Generalized
// Gauss-Jordan elimination with the element star on pivots, so divergence
// surfaces exactly (as top) instead of by iteration cutoff.
CostMatrix kleene_plus(const CostMatrix& m);

}  // namespace tropicost
