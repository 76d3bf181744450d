#pragma once

#include <string>
#include <vector>

#include "tropicost/matrix.hpp"

namespace tropicost {

// A concrete/abstract matrix pair related by a linear abstraction map.
// alpha1 holds only bot and unit entries; column sigma lists the abstract
// basis elements whose join over-approximates concrete basis element sigma
// (its "decomposition"). The endpoint sets are optional; when present on
// both sides the global-cost theorem applies as well.
struct LinearTriple {
  CostMatrix m;        // n x n concrete
  CostMatrix m_sharp;  // k x k abstract
  CostMatrix alpha1;   // k x n

  std::vector<size_t> initial, finals;              // concrete indices
  std::vector<size_t> initial_sharp, finals_sharp;  // abstract indices
};

// Abstract rows holding the unit in column sigma of alpha1.
std::vector<size_t> decomposition(const CostMatrix& alpha1, size_t sigma);

// Correct linear abstraction, by definition:
//   (1) alpha1 . M <= M-sharp . alpha1 entrywise,
//   (2) every abstract element decomposing an initial state is
//       abstract-initial, and
//   (3) the same for final states.
// detail carries the first violation; validation errors (bad dimensions,
// alpha1 entry outside {bot, unit}) throw instead.
struct TripleVerdict {
  bool ok = true;
  std::string detail;
};

TripleVerdict check_correct_linear(const LinearTriple& t);

// The canonical correct abstract matrix alpha1 . M . transpose(alpha1):
// entry (i, a) joins M's transfer into every concrete state that a helps
// decompose. Requires every alpha1 column to be nonempty, otherwise the
// transpose is not a right adjoint and the bound can fail.
CostMatrix best_composite_abstract(const CostMatrix& m,
                                   const CostMatrix& alpha1);

// Entry (row, col) of condition (1), recomputed from explicit index sets
// rather than matrix products: join of M[c][col] over concrete c whose
// decomposition contains `row`, against join of M-sharp[row][a] over the
// decomposition of `col`. The matrix route and this one must agree; tests
// lean on the disagreement being impossible.
bool check_expansion_bound(const LinearTriple& t, size_t row, size_t col);

// Condition (1) propagates to all matrix powers: alpha1 . M^k <= M-sharp^k
// . alpha1 for k = 1..kmax.
bool check_iterate_correct(const LinearTriple& t, unsigned kmax);

// Closed-walk transfer, selective carriers only (throws otherwise):
// every concrete closed walk cost M^k[s][s] is covered by some abstract
// entry M-sharp^k[i][j] with i, j in the decomposition of s, for every i.
bool check_cycle_cover(const LinearTriple& t, unsigned kmax);

// Cycle-mean transfer, selective carriers only: for every concrete
// closed walk cost M^k[s][s] there are j in the decomposition of s and a
// multiplier r <= decomposition size with
//   kth-root(M^k[s][s]) <= (k*r)th-root(M-sharp^(k*r)[j][j]).
bool check_cycle_mean_bound(const LinearTriple& t, unsigned kmax);

// The two headline bounds. gc is compared when all four endpoint sets are
// nonempty. rho is always computed on both sides; rho_guaranteed records
// whether the carrier is selective, where the bound is a theorem rather
// than an observation.
struct TheoremReport {
  bool gc_applicable = false;
  bool gc_ok = true;
  CostValue gc_concrete, gc_abstract;

  bool rho_guaranteed = false;
  bool rho_ok = true;
  CostValue rho_concrete, rho_abstract;
};

TheoremReport check_theorems(const LinearTriple& t);

}  // namespace tropicost
