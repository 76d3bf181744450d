#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "tropicost/harness.hpp"

using namespace tropicost;

namespace {

const CheckStat* find_check(const CampaignReport& rep, const char* name) {
  auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                         [&](const CheckStat& c) { return c.name == name; });
  return it == rep.checks.end() ? nullptr : &*it;
}

CampaignOptions small(DioidKind kind) {
  CampaignOptions opts;
  opts.kind = kind;
  if (kind == DioidKind::minplus_vec) opts.params.vec_dim = 2;
  if (kind == DioidKind::cap_cup || kind == DioidKind::cup_cap)
    opts.params.universe = {"p", "q"};
  opts.states = 4;
  opts.trials = 40;
  opts.seed = 21;
  opts.lemmas = true;
  return opts;
}

}  // namespace

TEST_CASE("campaigns pass and fill their tallies") {
  for (DioidKind kind :
       {DioidKind::maxplus, DioidKind::minplus_vec, DioidKind::cup_cap}) {
    CampaignOptions opts = small(kind);
    CAPTURE(static_cast<int>(kind));

    CampaignReport partition = partition_campaign(opts);
    CHECK(partition.ok());
    CHECK(partition.counterexample.empty());
    const CheckStat* galois = find_check(partition, "galois-laws");
    REQUIRE(galois != nullptr);
    CHECK(galois->passed == 40);
    CHECK(galois->failed == 0);

    CampaignReport linear = linear_campaign(opts);
    CHECK(linear.ok());

    CampaignReport oracle = oracle_campaign(opts);
    CHECK(oracle.ok());
    const CheckStat* closure = find_check(oracle, "closure-oracle");
    REQUIRE(closure != nullptr);
    CHECK(closure->passed + closure->skipped == 40);
  }
}

TEST_CASE("selective carriers run the cycle lemmas, others explore") {
  CampaignReport selective = linear_campaign(small(DioidKind::maxplus));
  CHECK(find_check(selective, "cycle-cover") != nullptr);
  CHECK(find_check(selective, "cycle-mean-bound") != nullptr);
  CHECK(find_check(selective, "rho-bound") != nullptr);
  CHECK(find_check(selective, "rho-exploration") == nullptr);

  CampaignReport blended = linear_campaign(small(DioidKind::minmax));
  CHECK(find_check(blended, "cycle-cover") == nullptr);
  CHECK(find_check(blended, "cycle-mean-bound") == nullptr);
  CHECK(find_check(blended, "rho-bound") == nullptr);
  const CheckStat* exploration = find_check(blended, "rho-exploration");
  REQUIRE(exploration != nullptr);
  CHECK(exploration->advisory);
}

TEST_CASE("campaigns are deterministic in the seed") {
  CampaignOptions opts = small(DioidKind::maxplus);
  CampaignReport a = oracle_campaign(opts);
  CampaignReport b = oracle_campaign(opts);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].passed == b.checks[i].passed);
    CHECK(a.checks[i].skipped == b.checks[i].skipped);
  }
}
