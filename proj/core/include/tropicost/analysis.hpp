#pragma once

#include "tropicost/system.hpp"

namespace tropicost {

// Join over initial/final pairs of the closure entry: the combined cost of
// all accepting runs. Bottom when no final state is reachable, top when the
// runs diverge.
CostValue global_cost(const TransitionSystem& p);
CostValue global_cost(const CostMatrix& m, const std::vector<size_t>& initial,
                      const std::vector<size_t>& finals);

}  // namespace tropicost
