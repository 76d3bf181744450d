#pragma once

#include <string>
#include <vector>

#include "tropicost/system.hpp"

namespace tropicost {

// A total map from concrete states onto named abstract states (blocks).
// block_of maps every concrete index to a block index.
struct Partition {
  std::vector<std::string> blocks;
  std::vector<size_t> block_of;
};

// Text format, one mapping per line, '#' comments:
//
//   a -> A
//   b -> B
//
// Every state of p must be mapped exactly once; blocks are numbered by
// first appearance.
Partition parse_partition(std::string_view text, const TransitionSystem& p);

// The pair of linear maps induced by a state map: alpha has one unit per
// column (at the row of the state's block) and gamma is its transpose.
// Together they form a Galois connection between the moduloids over the
// concrete and abstract state spaces.
struct PartitionLift {
  DioidPtr dioid;
  Partition partition;
  CostMatrix alpha;  // blocks x states
  CostMatrix gamma;  // states x blocks
};

PartitionLift lift_partition(const TransitionSystem& p, Partition q);

// alpha . gamma <= identity and identity <= gamma . alpha, by matrix
// arithmetic. Fills *why with the first violated law when given.
bool check_galois(const PartitionLift& lift, std::string* why = nullptr);

// Most precise abstraction of p over the blocks: matrix alpha M gamma
// (entrywise the join of each block-to-block submatrix), initial and final
// blocks those containing an initial resp. final state.
TransitionSystem best_abstract_system(const TransitionSystem& p,
                                      const PartitionLift& lift);

// Definition of a correct abstraction, decided literally:
//   (1) alpha . M <= M-abstract . alpha   entrywise,
//   (2) the block of every initial state is abstract-initial,
//   (3) the block of every final state is abstract-final.
// detail names the first violated condition and entry; empty when ok.
struct CorrectnessVerdict {
  bool ok = true;
  std::string detail;
};

CorrectnessVerdict check_correct_abstraction(const TransitionSystem& p,
                                             const TransitionSystem& abs,
                                             const PartitionLift& lift);

// What a correct abstraction promises: the abstract global and long-run
// costs bound the concrete ones from above. Used by the verification
// harness and the CLI comparison view.
struct CostComparison {
  bool global_ok = false;
  bool longrun_ok = false;
  CostValue global_concrete, global_abstract;
  CostValue longrun_concrete, longrun_abstract;

  bool ok() const { return global_ok && longrun_ok; }
};

CostComparison compare_abstraction_costs(const TransitionSystem& p,
                                         const TransitionSystem& abs);

}  // namespace tropicost
