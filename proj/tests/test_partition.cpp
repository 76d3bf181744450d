#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropicost/analysis.hpp"
#include "tropicost/linear.hpp"
#include "tropicost/longrun.hpp"
#include "tropicost/partition.hpp"
#include "tropicost/system.hpp"

using namespace tropicost;

namespace {

TransitionSystem four_state() {
  return parse_system(R"(dioid maxplus
states a b c d
init a
final d
edge a b 8
edge b c 3
edge c c 2
edge c d 4
edge d b 5
)")
      .system;
}

const char* kMap = "a -> A\nb -> B\nc -> B\nd -> B\n";

}  // namespace

TEST_CASE("state maps parse by first appearance") {
  TransitionSystem p = four_state();
  Partition q = parse_partition(kMap, p);
  CHECK(q.blocks == std::vector<std::string>{"A", "B"});
  CHECK(q.block_of == std::vector<size_t>{0, 1, 1, 1});

  CHECK_THROWS_AS(parse_partition("a -> A\n", p), Error);  // not total
  CHECK_THROWS_AS(parse_partition("a -> A\nz -> A\n", p), Error);
  CHECK_THROWS_AS(
      parse_partition("a -> A\na -> B\nb -> A\nc -> A\nd -> A\n", p), Error);
}

TEST_CASE("collapsing the cycle region to one block") {
  TransitionSystem p = four_state();
  const auto& d = *p.dioid;
  PartitionLift lift = lift_partition(p, parse_partition(kMap, p));
  CHECK(check_galois(lift));

  TransitionSystem abs = best_abstract_system(p, lift);
  CHECK(abs.states == std::vector<std::string>{"A", "B"});
  CHECK(abs.initial == std::vector<size_t>{0});
  CHECK(abs.finals == std::vector<size_t>{1});

  // block-to-block joins: A->B keeps the entry edge, B->B takes the max
  // of the four internal weights 3, 2, 4, 5
  CHECK(d.equal(abs.matrix.at(0, 0), d.bot()));
  CHECK(d.equal(abs.matrix.at(0, 1), d.from_rational(8)));
  CHECK(d.equal(abs.matrix.at(1, 0), d.bot()));
  CHECK(d.equal(abs.matrix.at(1, 1), d.from_rational(5)));

  CHECK(d.equal(long_run_cost(abs), d.from_rational(5)));

  CorrectnessVerdict verdict = check_correct_abstraction(p, abs, lift);
  CHECK(verdict.ok);
  CHECK(verdict.detail.empty());

  CostComparison costs = compare_abstraction_costs(p, abs);
  CHECK(costs.ok());
  CHECK(d.equal(costs.longrun_concrete, d.from_rational(4)));
  CHECK(d.equal(costs.longrun_abstract, d.from_rational(5)));
  CHECK(d.equal(costs.global_concrete, d.top()));
  CHECK(d.equal(costs.global_abstract, d.top()));
}

TEST_CASE("a corrupted lift fails the connection laws") {
  TransitionSystem p = four_state();
  PartitionLift lift = lift_partition(p, parse_partition(kMap, p));
  const auto& d = *p.dioid;

  // claim state b belongs to both blocks
  lift.alpha.set(0, 1, d.one());
  std::string why;
  CHECK_FALSE(check_galois(lift, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("violations are reported with their first witness") {
  TransitionSystem p = four_state();
  const auto& d = *p.dioid;
  PartitionLift lift = lift_partition(p, parse_partition(kMap, p));
  TransitionSystem abs = best_abstract_system(p, lift);

  SUBCASE("transfer bound") {
    abs.matrix.set(0, 1, d.from_rational(7));  // below the concrete 8
    CorrectnessVerdict verdict = check_correct_abstraction(p, abs, lift);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.detail.find("transfer") != std::string::npos);
  }
  SUBCASE("initial inclusion") {
    abs.initial = {1};
    CorrectnessVerdict verdict = check_correct_abstraction(p, abs, lift);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.detail.find("initial") != std::string::npos);
  }
  SUBCASE("final inclusion") {
    abs.finals = {0};
    CorrectnessVerdict verdict = check_correct_abstraction(p, abs, lift);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.detail.find("final") != std::string::npos);
  }
}

TEST_CASE("partition lifts satisfy the linear-map conditions too") {
  TransitionSystem p = four_state();
  PartitionLift lift = lift_partition(p, parse_partition(kMap, p));
  TransitionSystem abs = best_abstract_system(p, lift);

  LinearTriple t{p.matrix,   abs.matrix, lift.alpha,
                 p.initial,  p.finals,   abs.initial,
                 abs.finals};
  TripleVerdict verdict = check_correct_linear(t);
  CHECK(verdict.ok);

  // the composite construction reproduces the block-join matrix
  CostMatrix composite = best_composite_abstract(p.matrix, lift.alpha);
  CHECK(composite == abs.matrix);
}

TEST_CASE("empty blocks are legal") {
  TransitionSystem p = four_state();
  Partition q;
  q.blocks = {"A", "B", "GHOST"};
  q.block_of = {0, 1, 1, 1};
  PartitionLift lift = lift_partition(p, q);
  CHECK(check_galois(lift));
  TransitionSystem abs = best_abstract_system(p, lift);
  const auto& d = *p.dioid;
  CHECK(d.equal(abs.matrix.at(2, 2), d.bot()));
  CHECK(check_correct_abstraction(p, abs, lift).ok);
}

TEST_CASE("partition bounds hold for a set-valued carrier") {
  // same shape, cup-cap weights: abstraction joins with union
  TransitionSystem p = parse_system(R"(dioid cup-cap
universe u v w
states a b c d
init a
final d
edge a b {u}
edge b c {v}
edge c c {w}
edge c d {u,v}
edge d b {}
)")
                          .system;
  const auto& d = *p.dioid;
  PartitionLift lift = lift_partition(p, parse_partition(kMap, p));
  TransitionSystem abs = best_abstract_system(p, lift);
  CHECK(check_correct_abstraction(p, abs, lift).ok);
  CHECK(d.leq(global_cost(p), global_cost(abs)));
  CHECK(d.leq(long_run_cost(p), long_run_cost(abs)));
  std::vector<std::string> everything{"u", "v", "w"};
  CHECK(d.equal(abs.matrix.at(1, 1), d.set_of(everything)));
}
