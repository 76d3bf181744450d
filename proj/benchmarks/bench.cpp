// Microbenchmarks for the hot paths: closure, long-run cost, abstraction
// lifting, and the one numeric approximation in the suite. Inputs are
// deterministic (fixed seeds) so runs are comparable across machines.

#include <benchmark/benchmark.h>

#include "tropicost/closure.hpp"
#include "tropicost/longrun.hpp"
#include "tropicost/oracle.hpp"
#include "tropicost/partition.hpp"

using namespace tropicost;

namespace {

TransitionSystem sized_system(int states, DioidKind kind, double density) {
  RandomSystemSpec spec;
  spec.states = states;
  spec.density = density;
  spec.kind = kind;
  spec.seed = 42 + static_cast<std::uint64_t>(states);
  return random_system(spec);
}

void BM_KleenePlus(benchmark::State& state) {
  TransitionSystem p =
      sized_system(static_cast<int>(state.range(0)), DioidKind::maxplus, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(kleene_plus(p.matrix));
}
BENCHMARK(BM_KleenePlus)->RangeMultiplier(2)->Range(4, 64);

void BM_KleenePlusMinplusVec(benchmark::State& state) {
  RandomSystemSpec spec;
  spec.states = static_cast<int>(state.range(0));
  spec.density = 0.3;
  spec.kind = DioidKind::minplus_vec;
  spec.params.vec_dim = 4;
  spec.seed = 77;
  TransitionSystem p = random_system(spec);
  for (auto _ : state) benchmark::DoNotOptimize(kleene_plus(p.matrix));
}
BENCHMARK(BM_KleenePlusMinplusVec)->RangeMultiplier(2)->Range(4, 32);

void BM_LongRunCost(benchmark::State& state) {
  TransitionSystem p =
      sized_system(static_cast<int>(state.range(0)), DioidKind::maxplus, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(long_run_cost(p));
}
BENCHMARK(BM_LongRunCost)->RangeMultiplier(2)->Range(4, 64);

// The brute-force counterpart at the sizes the campaigns use, for contrast
// with BM_KleenePlus: enumeration is the oracle, not the product.
void BM_ClosureOracle(benchmark::State& state) {
  TransitionSystem p =
      sized_system(static_cast<int>(state.range(0)), DioidKind::maxplus, 0.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(closure_oracle(p, std::uint64_t{1} << 40));
}
BENCHMARK(BM_ClosureOracle)->DenseRange(3, 7);

void BM_LiftAndAbstract(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TransitionSystem p = sized_system(n, DioidKind::maxplus, 0.3);
  Partition q;
  for (size_t b = 0; b < size_t(n) / 2; ++b)
    q.blocks.push_back("B" + std::to_string(b));
  for (size_t s = 0; s < p.size(); ++s)
    q.block_of.push_back(s % q.blocks.size());
  for (auto _ : state) {
    PartitionLift lift = lift_partition(p, q);
    benchmark::DoNotOptimize(best_abstract_system(p, lift));
  }
}
BENCHMARK(BM_LiftAndAbstract)->RangeMultiplier(2)->Range(4, 64);

// Exact detection on a perfect power against the dyadic floor on an
// irrational root; the gap is the cost of the grid search.
void BM_MaxtimesRootExact(benchmark::State& state) {
  DioidPtr d = make_dioid(DioidKind::maxtimes);
  CostValue x = d->from_rational(mpq_class(1024, 59049));  // (4/9)^5
  for (auto _ : state) benchmark::DoNotOptimize(d->nth_root(x, 5));
}
BENCHMARK(BM_MaxtimesRootExact);

void BM_MaxtimesRootFloored(benchmark::State& state) {
  DioidPtr d = make_dioid(DioidKind::maxtimes);
  CostValue x = d->from_rational(mpq_class(2));
  for (auto _ : state) benchmark::DoNotOptimize(d->nth_root(x, 2));
}
BENCHMARK(BM_MaxtimesRootFloored);

}  // namespace

BENCHMARK_MAIN();
