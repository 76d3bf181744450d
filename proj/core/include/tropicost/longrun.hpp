#pragma once

#include "tropicost/system.hpp"

namespace tropicost {

// Per-step cost of a run: the kth root of the run's combined cost, where k
// is its number of transitions. `path` is a state index sequence; a missing
// edge makes the result bottom.
CostValue average_path_cost(const TransitionSystem& p,
                            const std::vector<size_t>& path);

// Long-run cost of a square matrix: join over k in 1..n of the kth root of
// trace(m^k). Bottom exactly when the graph has no cycle.
CostValue long_run_cost(const CostMatrix& m);

// System form: computed on the part reachable from the initial states, so
// unreachable components never contribute.
CostValue long_run_cost(const TransitionSystem& p);

}  // namespace tropicost
