#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropicost/linear.hpp"
#include "tropicost/oracle.hpp"
#include "tropicost/partition.hpp"

namespace tropicost {

// Randomized theorem checking. Each campaign runs `trials` independent
// instances, every one deterministically derived from the master seed, and
// tallies each named check. The first genuine failure is kept as a
// counterexample in the transition-system file format.
struct CampaignOptions {
  DioidKind kind = DioidKind::maxplus;
  DioidParams params;  // universe/vec_dim defaults as in random_system
  int states = 4;      // exact size; the oracle campaign varies 1..states
  int trials = 1000;
  std::uint64_t seed = 1;
  double density = 0.5;
  unsigned kmax = 4;    // power depth for the iterate/cycle checks
  bool lemmas = false;  // include the per-lemma checks (linear campaign)
};

struct CheckStat {
  std::string name;
  int passed = 0;
  int failed = 0;
  int skipped = 0;      // budget exhaustion, mostly
  bool advisory = false;  // recorded, but failures do not fail the campaign
};

struct CampaignReport {
  std::string campaign;
  std::vector<CheckStat> checks;
  std::vector<std::string> notes;
  std::string counterexample;        // file-format system, empty when clean
  std::string counterexample_check;  // which check it violates

  bool ok() const;
};

// Random systems, random state maps, best abstract systems: the Galois
// laws, the correctness-by-construction verdict, and both cost bounds.
// The bounds hold in every carrier here (blockwise joins dominate
// transitions directly), so all checks assert.
CampaignReport partition_campaign(const CampaignOptions& opts);

// Random correct linear triples built by the maximal-transfer rule plus
// random upward slack; abstract endpoint sets are the decomposition images.
// Checks the correctness definition, the gc bound, the rho bound (asserted
// on selective carriers, advisory elsewhere) and, with opts.lemmas, the
// entrywise expansion, iterate, cycle-cover and cycle-mean checks.
CampaignReport linear_campaign(const CampaignOptions& opts);

// Analytic results against brute force: closure against walk enumeration,
// long-run cost against enumerated cycle means, and element and matrix
// residuals against sampled greatest-subsolution properties.
CampaignReport oracle_campaign(const CampaignOptions& opts);

}  // namespace tropicost
