#pragma once

#include <cstdint>
#include <vector>

#include "tropicost/system.hpp"

namespace tropicost {

// These routines answer the same questions as the analytic code by brute
// enumeration, and deliberately live below it in the link graph: nothing
// here may call closure, long-run or residual computations.

// Default 1000000; the TROPICOST_WALK_BUDGET environment variable overrides.
std::uint64_t walk_budget_from_env();

// Deterministic 64-bit generator (splitmix64). The standard distributions
// are implementation-defined, so everything random here goes through this
// to keep seeds reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next();
  double next_unit();                 // [0, 1)
  long next_in(long lo, long hi);     // inclusive
};

struct RandomSystemSpec {
  int states = 4;
  double density = 0.5;
  DioidKind kind = DioidKind::maxplus;
  DioidParams params;  // universe/vec_dim filled with small defaults if unset
  std::uint64_t seed = 0;
  // Rational sampling range: numerator in [num_lo, num_hi] (clamped to 0 on
  // nonnegative carriers), denominator in [1, den_hi].
  long num_lo = -10;
  long num_hi = 10;
  long den_hi = 4;
};

// One pseudorandom carrier element: a small rational (clamped nonnegative
// where the carrier demands it), a subset of d's universe, or a tuple.
// Bottom and top are never produced; callers mix those in themselves.
CostValue random_cost(const CostDioid& d, SplitMix64& rng, long num_lo = -10,
                      long num_hi = 10, long den_hi = 4);

// Fully determined by the spec; equal specs give equal systems.
TransitionSystem random_system(const RandomSystemSpec& spec);

struct WalkRecord {
  std::vector<size_t> states;
  CostValue cost;
};

// Every walk src -> dst with 1..max_len transitions along non-bottom edges.
// Revisits allowed. Throws BudgetError when the search would exceed budget
// edge traversals.
std::vector<WalkRecord> enumerate_paths(const TransitionSystem& p, size_t src,
                                        size_t dst, unsigned max_len,
                                        std::uint64_t budget = 0);

// Join of the walk costs, without materializing the list.
CostValue sum_walk_costs(const TransitionSystem& p, size_t src, size_t dst,
                         unsigned max_len, std::uint64_t budget = 0);

// Finite-horizon global cost: join over initial -> final walks of length at
// most max_len. Monotone in max_len and below the exact global cost.
CostValue bounded_trace_costs(const TransitionSystem& p, unsigned max_len,
                              std::uint64_t budget = 0);

// Join of the per-step averages of every closed walk of length 1..max_len
// inside the reachable part. max_len 0 means the number of reachable states.
CostValue cycle_means_oracle(const TransitionSystem& p, unsigned max_len = 0,
                             std::uint64_t budget = 0);

// Every cycle with no repeated state except the endpoints, each reported
// once, rooted at its smallest state index.
std::vector<std::vector<size_t>> simple_cycles(const TransitionSystem& p);

// Expected closure by enumeration. An entry is top when some walk passes a
// state on a cycle whose cost is not below the unit (possible only on the
// totally ordered carriers); otherwise it is the join over walks of length
// at most |states|, which suffices because longer walks only repeat cycles
// that cannot raise the cost.
CostMatrix closure_oracle(const TransitionSystem& p, std::uint64_t budget = 0);

// Join of every domain point x with f(x) <= b: the brute-force residual.
template <class X, class F, class LeqFn, class JoinFn>
X greatest_subsolution(const std::vector<X>& domain, F&& f, const X& b,
                       LeqFn&& leq, JoinFn&& join, X bottom) {
  X acc = std::move(bottom);
  for (const X& x : domain)
    if (leq(f(x), b)) acc = join(acc, x);
  return acc;
}

// Element convenience form over an explicit carrier sample.
template <class F>
CostValue greatest_subsolution(const CostDioid& d,
                               const std::vector<CostValue>& domain, F&& f,
                               const CostValue& b) {
  return greatest_subsolution(
      domain, std::forward<F>(f), b,
      [&](const CostValue& x, const CostValue& y) { return d.leq(x, y); },
      [&](const CostValue& x, const CostValue& y) { return d.oplus(x, y); },
      d.bot());
}

}  // namespace tropicost
