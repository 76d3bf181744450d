#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropicost/matrix.hpp"

namespace tropicost {

// Weighted transition system: named states, a square cost matrix (bottom
// means "no transition"), and nonempty initial/final sets. The name-to-index
// map is the `states` vector itself; everything else speaks indices.
struct TransitionSystem {
  DioidPtr dioid;
  std::vector<std::string> states;
  CostMatrix matrix;
  std::vector<size_t> initial;
  std::vector<size_t> finals;

  size_t size() const { return states.size(); }
  std::optional<size_t> state_index(std::string_view name) const;
  const std::string& state_name(size_t i) const { return states.at(i); }
};

// All-bottom matrix; validates that states are unique and the given sets are
// nonempty, in range and duplicate-free (they get sorted).
TransitionSystem make_system(DioidPtr dioid, std::vector<std::string> states,
                             std::vector<size_t> initial,
                             std::vector<size_t> finals);

struct ParsedSystem {
  TransitionSystem system;
  std::vector<std::string> warnings;
};

// Line-oriented text format:
//
//   # comment
//   dioid maxplus
//   universe x y z        (set carriers only, before `states`)
//   merge-edges           (optional: repeated edges combine by oplus)
//   states a b c d
//   init a
//   final d
//   edge a b 8
//
// Missing init/final default to the first/last state with a warning.
// Repeated edges are an error unless merge-edges was given.
ParsedSystem parse_system(std::string_view text);

// Canonical form: directives in the order above, edges row-major with
// canonical cost literals, no merge-edges. Parsing it back yields the same
// system.
std::string serialize_system(const TransitionSystem& p);

// Indices of states reachable from the initial set through non-bottom
// edges, including the initial states themselves. Sorted.
std::vector<size_t> reachable_states(const TransitionSystem& p);

// Restriction to the reachable part. Final states outside it are dropped,
// which may leave the final set empty.
TransitionSystem reachable_restrict(const TransitionSystem& p);

}  // namespace tropicost
