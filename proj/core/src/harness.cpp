#include "tropicost/harness.hpp"

#include <algorithm>

#include "tropicost/analysis.hpp"
#include "tropicost/closure.hpp"
#include "tropicost/longrun.hpp"

namespace tropicost {

namespace {

CheckStat& stat(CampaignReport& rep, const std::string& name,
                bool advisory = false) {
  for (auto& c : rep.checks)
    if (c.name == name) return c;
  rep.checks.push_back(CheckStat{name, 0, 0, 0, advisory});
  return rep.checks.back();
}

// Tallies one outcome; the first failing trial donates the counterexample.
void record(CampaignReport& rep, const std::string& name, bool pass,
            const std::string& witness, bool advisory = false) {
  CheckStat& c = stat(rep, name, advisory);
  if (pass) {
    ++c.passed;
    return;
  }
  ++c.failed;
  if (!advisory && rep.counterexample.empty()) {
    rep.counterexample = witness;
    rep.counterexample_check = name;
  }
}

std::string describe_partition(const TransitionSystem& p, const Partition& q) {
  std::string out = serialize_system(p);
  out += "# state map\n";
  for (size_t s = 0; s < p.size(); ++s)
    out += "#   " + p.state_name(s) + " -> " + q.blocks[q.block_of[s]] + "\n";
  return out;
}

std::string describe_triple(const LinearTriple& t, const DioidPtr& d) {
  std::vector<std::string> names;
  for (size_t i = 0; i < t.m.rows(); ++i)
    names.push_back("s" + std::to_string(i));
  TransitionSystem p = make_system(d, std::move(names), t.initial, t.finals);
  p.matrix = t.m;

  std::string out = serialize_system(p);
  out += "# abstract matrix (" + std::to_string(t.m_sharp.rows()) + " states)\n";
  for (size_t i = 0; i < t.m_sharp.rows(); ++i)
    for (size_t j = 0; j < t.m_sharp.cols(); ++j)
      if (!d->equal(t.m_sharp.at(i, j), d->bot()))
        out += "#   a" + std::to_string(i) + " -> a" + std::to_string(j) +
               " : " + d->to_string(t.m_sharp.at(i, j)) + "\n";
  auto set_line = [&](const char* label, const std::vector<size_t>& xs) {
    out += std::string("# ") + label + ":";
    for (size_t x : xs) out += " a" + std::to_string(x);
    out += "\n";
  };
  set_line("abstract init", t.initial_sharp);
  set_line("abstract final", t.finals_sharp);
  for (size_t c = 0; c < t.alpha1.cols(); ++c) {
    out += "# alpha s" + std::to_string(c) + " ->";
    for (size_t r : decomposition(t.alpha1, c))
      out += " a" + std::to_string(r);
    out += "\n";
  }
  return out;
}

RandomSystemSpec spec_for(const CampaignOptions& opts, std::uint64_t seed,
                          int states) {
  RandomSystemSpec spec;
  spec.states = states;
  spec.density = opts.density;
  spec.kind = opts.kind;
  spec.params = opts.params;
  spec.seed = seed;
  return spec;
}

}  // namespace

bool CampaignReport::ok() const {
  for (const auto& c : checks)
    if (!c.advisory && c.failed > 0) return false;
  return true;
}

CampaignReport partition_campaign(const CampaignOptions& opts) {
  if (opts.trials < 0) throw Error("negative trial count");
  CampaignReport rep;
  rep.campaign = "partition";
  SplitMix64 master{opts.seed};

  for (int trial = 0; trial < opts.trials; ++trial) {
    std::uint64_t sys_seed = master.next();
    SplitMix64 rng{master.next()};
    TransitionSystem p = random_system(spec_for(opts, sys_seed, opts.states));

    Partition q;
    size_t nblocks = 1 + static_cast<size_t>(rng.next() % p.size());
    for (size_t b = 0; b < nblocks; ++b)
      q.blocks.push_back("B" + std::to_string(b));
    for (size_t s = 0; s < p.size(); ++s)
      q.block_of.push_back(static_cast<size_t>(rng.next() % nblocks));

    PartitionLift lift = lift_partition(p, q);
    std::string witness = describe_partition(p, q);

    record(rep, "galois-laws", check_galois(lift), witness);

    TransitionSystem abs = best_abstract_system(p, lift);
    record(rep, "correct-by-construction",
           check_correct_abstraction(p, abs, lift).ok, witness);

    CostComparison costs = compare_abstraction_costs(p, abs);
    record(rep, "global-bound", costs.global_ok, witness);
    record(rep, "longrun-bound", costs.longrun_ok, witness);
  }
  return rep;
}

CampaignReport linear_campaign(const CampaignOptions& opts) {
  if (opts.trials < 0) throw Error("negative trial count");
  CampaignReport rep;
  rep.campaign = "linear";
  SplitMix64 master{opts.seed};

  for (int trial = 0; trial < opts.trials; ++trial) {
    std::uint64_t sys_seed = master.next();
    SplitMix64 rng{master.next()};
    TransitionSystem p = random_system(spec_for(opts, sys_seed, opts.states));
    const DioidPtr& d = p.dioid;
    const size_t n = p.size();

    // Abstraction matrix: nonempty random decomposition per column. Empty
    // columns would make the endpoint conditions vacuous and void the
    // global-cost bound, so they are ruled out here.
    size_t k = 1 + static_cast<size_t>(rng.next() % n);
    CostMatrix alpha1(d, k, n);
    for (size_t c = 0; c < n; ++c) {
      bool any = false;
      for (size_t r = 0; r < k; ++r)
        if (rng.next() & 1) {
          alpha1.set(r, c, d->one());
          any = true;
        }
      if (!any) alpha1.set(static_cast<size_t>(rng.next() % k), c, d->one());
    }

    // Maximal-transfer abstract matrix: entry (i, a) joins every transfer
    // (alpha1 M)[i][sigma] that condition (1) charges against column a,
    // making the triple correct by construction. Random upward slack keeps
    // the abstract side from being exactly tight.
    CostMatrix am = mat_mul(alpha1, p.matrix);
    CostMatrix m_sharp(d, k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t a = 0; a < k; ++a) {
        CostValue v = d->bot();
        for (size_t c = 0; c < n; ++c)
          if (d->equal(alpha1.at(a, c), d->one()))
            v = d->oplus(v, am.at(i, c));
        if (rng.next() % 4 == 0) v = d->oplus(v, random_cost(*d, rng));
        m_sharp.set(i, a, v);
      }

    LinearTriple t{p.matrix, std::move(m_sharp), std::move(alpha1),
                   p.initial,  p.finals,         {},
                   {},         };
    std::vector<char> in_init(k, 0), in_final(k, 0);
    for (size_t s : t.initial)
      for (size_t a : decomposition(t.alpha1, s)) in_init[a] = 1;
    for (size_t s : t.finals)
      for (size_t a : decomposition(t.alpha1, s)) in_final[a] = 1;
    for (size_t a = 0; a < k; ++a) {
      if (in_init[a]) t.initial_sharp.push_back(a);
      if (in_final[a]) t.finals_sharp.push_back(a);
    }

    std::string witness = describe_triple(t, d);

    record(rep, "linear-definition", check_correct_linear(t).ok, witness);

    TheoremReport thm = check_theorems(t);
    record(rep, "gc-bound", thm.gc_applicable && thm.gc_ok, witness);
    if (thm.rho_guaranteed) {
      record(rep, "rho-bound", thm.rho_ok, witness);
    } else {
      record(rep, "rho-exploration", thm.rho_ok, witness, true);
      if (!thm.rho_ok)
        rep.notes.push_back(
            "trial " + std::to_string(trial) + ": rho bound " +
            d->to_string(thm.rho_concrete) + " vs " +
            d->to_string(thm.rho_abstract) +
            " fails without selectivity (expected artifact, not asserted)");
    }

    if (opts.lemmas) {
      bool expansion = true;
      for (size_t r = 0; r < t.m_sharp.rows() && expansion; ++r)
        for (size_t c = 0; c < t.m.cols() && expansion; ++c)
          expansion = check_expansion_bound(t, r, c);
      record(rep, "expansion-bound", expansion, witness);
      record(rep, "iterate-correct", check_iterate_correct(t, opts.kmax),
             witness);
      if (d->flags().selective) {
        record(rep, "cycle-cover", check_cycle_cover(t, opts.kmax), witness);
        record(rep, "cycle-mean-bound", check_cycle_mean_bound(t, opts.kmax),
               witness);
      }
    }
  }
  return rep;
}

CampaignReport oracle_campaign(const CampaignOptions& opts) {
  if (opts.trials < 0) throw Error("negative trial count");
  CampaignReport rep;
  rep.campaign = "oracle";
  SplitMix64 master{opts.seed};

  for (int trial = 0; trial < opts.trials; ++trial) {
    std::uint64_t sys_seed = master.next();
    SplitMix64 rng{master.next()};
    int states = 1 + static_cast<int>(rng.next() % opts.states);
    TransitionSystem p = random_system(spec_for(opts, sys_seed, states));
    const DioidPtr& d = p.dioid;
    std::string witness = serialize_system(p);

    try {
      record(rep, "closure-oracle", kleene_plus(p.matrix) == closure_oracle(p),
             witness);
    } catch (const BudgetError&) {
      ++stat(rep, "closure-oracle").skipped;
    }
    try {
      record(rep, "longrun-oracle",
             d->equal(long_run_cost(p), cycle_means_oracle(p)), witness);
    } catch (const BudgetError&) {
      ++stat(rep, "longrun-oracle").skipped;
    }

    // Residuals: soundness exactly, greatestness against sampled points
    // plus the interesting constants.
    auto pick = [&]() -> CostValue {
      switch (rng.next() % 8) {
        case 0: return d->bot();
        case 1: return d->top();
        case 2: return d->one();
        default: return random_cost(*d, rng);
      }
    };
    CostValue a = pick(), b = pick();
    CostValue r = d->residual(a, b);
    d->validate(r);
    record(rep, "residual-sound", d->leq(d->otimes(a, r), b), witness);
    bool greatest = true;
    std::vector<CostValue> probes{d->bot(), d->top(), d->one(), a, b};
    for (int i = 0; i < 20; ++i) probes.push_back(pick());
    for (const CostValue& x : probes)
      if (d->leq(d->otimes(a, x), b) && !d->leq(x, r)) greatest = false;
    record(rep, "residual-greatest", greatest, witness);

    CostVector y(d, p.size());
    for (size_t i = 0; i < y.dim(); ++i) y.set(i, pick());
    CostVector rv = mat_residual(p.matrix, y);
    record(rep, "mat-residual-sound", vec_leq(mat_vec(p.matrix, rv), y),
           witness);
    bool mat_greatest = true;
    for (int probe = 0; probe < 10 && mat_greatest; ++probe) {
      CostVector v(d, p.size());
      for (size_t i = 0; i < v.dim(); ++i) v.set(i, pick());
      if (vec_leq(mat_vec(p.matrix, v), y) && !vec_leq(v, rv))
        mat_greatest = false;
    }
    record(rep, "mat-residual-greatest", mat_greatest, witness);
  }
  return rep;
}

}  // namespace tropicost
