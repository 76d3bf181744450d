#include "tropicost/linear.hpp"

#include <algorithm>

#include "tropicost/analysis.hpp"
#include "tropicost/error.hpp"
#include "tropicost/longrun.hpp"

namespace tropicost {

namespace {

void validate_triple(const LinearTriple& t) {
  const auto& d = *t.m.dioid();
  if (!d.compatible(*t.m_sharp.dioid()) || !d.compatible(*t.alpha1.dioid()))
    throw Error("triple matrices live over different dioids");
  const size_t n = t.m.rows(), k = t.m_sharp.rows();
  if (t.m.cols() != n || t.m_sharp.cols() != k || t.alpha1.rows() != k ||
      t.alpha1.cols() != n)
    throw Error("triple matrices have mismatched dimensions");
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < n; ++c) {
      const CostValue& v = t.alpha1.at(r, c);
      if (!d.equal(v, d.bot()) && !d.equal(v, d.one()))
        throw Error("alpha1 entry is neither bot nor the unit");
    }
  for (size_t s : t.initial)
    if (s >= n) throw Error("initial index out of range");
  for (size_t s : t.finals)
    if (s >= n) throw Error("final index out of range");
  for (size_t s : t.initial_sharp)
    if (s >= k) throw Error("abstract initial index out of range");
  for (size_t s : t.finals_sharp)
    if (s >= k) throw Error("abstract final index out of range");
}

void require_selective(const LinearTriple& t, const char* what) {
  if (!t.m.dioid()->flags().selective)
    throw Error(std::string(what) +
                " requires a selective carrier; this one is not");
}

}  // namespace

std::vector<size_t> decomposition(const CostMatrix& alpha1, size_t sigma) {
  const auto& d = *alpha1.dioid();
  std::vector<size_t> rows;
  for (size_t r = 0; r < alpha1.rows(); ++r)
    if (d.equal(alpha1.at(r, sigma), d.one())) rows.push_back(r);
  return rows;
}

TripleVerdict check_correct_linear(const LinearTriple& t) {
  validate_triple(t);
  const auto& d = *t.m.dioid();

  TripleVerdict v;
  CostMatrix lhs = mat_mul(t.alpha1, t.m);
  CostMatrix rhs = mat_mul(t.m_sharp, t.alpha1);
  for (size_t r = 0; r < lhs.rows(); ++r)
    for (size_t c = 0; c < lhs.cols(); ++c)
      if (!d.leq(lhs.at(r, c), rhs.at(r, c))) {
        v.ok = false;
        v.detail = "transfer bound violated at row " + std::to_string(r) +
                   ", column " + std::to_string(c) + ": " +
                   d.to_string(lhs.at(r, c)) + " is not below " +
                   d.to_string(rhs.at(r, c));
        return v;
      }

  auto member = [](const std::vector<size_t>& xs, size_t x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  for (size_t s : t.initial)
    for (size_t a : decomposition(t.alpha1, s))
      if (!member(t.initial_sharp, a)) {
        v.ok = false;
        v.detail = "initial state " + std::to_string(s) + " decomposes into " +
                   std::to_string(a) + ", which is not abstract-initial";
        return v;
      }
  for (size_t s : t.finals)
    for (size_t a : decomposition(t.alpha1, s))
      if (!member(t.finals_sharp, a)) {
        v.ok = false;
        v.detail = "final state " + std::to_string(s) + " decomposes into " +
                   std::to_string(a) + ", which is not abstract-final";
        return v;
      }
  return v;
}

CostMatrix best_composite_abstract(const CostMatrix& m,
                                   const CostMatrix& alpha1) {
  const auto& d = *alpha1.dioid();
  for (size_t c = 0; c < alpha1.cols(); ++c) {
    bool nonempty = false;
    for (size_t r = 0; r < alpha1.rows(); ++r)
      if (!d.equal(alpha1.at(r, c), d.bot())) nonempty = true;
    if (!nonempty)
      throw Error("alpha1 column " + std::to_string(c) +
                  " is empty; the composite bound needs total coverage");
  }
  return mat_mul(mat_mul(alpha1, m), transpose(alpha1));
}

bool check_expansion_bound(const LinearTriple& t, size_t row, size_t col) {
  validate_triple(t);
  const auto& d = *t.m.dioid();
  if (row >= t.m_sharp.rows() || col >= t.m.cols())
    throw Error("expansion bound indices out of range");

  CostValue lhs = d.bot();
  for (size_t c = 0; c < t.m.rows(); ++c)
    if (d.equal(t.alpha1.at(row, c), d.one()))
      lhs = d.oplus(lhs, t.m.at(c, col));

  CostValue rhs = d.bot();
  for (size_t a : decomposition(t.alpha1, col))
    rhs = d.oplus(rhs, t.m_sharp.at(row, a));

  return d.leq(lhs, rhs);
}

bool check_iterate_correct(const LinearTriple& t, unsigned kmax) {
  validate_triple(t);
  if (kmax == 0) throw Error("iterate check needs kmax >= 1");
  CostMatrix mk = t.m;
  CostMatrix msk = t.m_sharp;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) {
      mk = mat_mul(mk, t.m);
      msk = mat_mul(msk, t.m_sharp);
    }
    if (!mat_leq(mat_mul(t.alpha1, mk), mat_mul(msk, t.alpha1))) return false;
  }
  return true;
}

bool check_cycle_cover(const LinearTriple& t, unsigned kmax) {
  validate_triple(t);
  require_selective(t, "cycle cover check");
  if (kmax == 0) throw Error("cycle cover check needs kmax >= 1");
  const auto& d = *t.m.dioid();

  CostMatrix mk = t.m;
  CostMatrix msk = t.m_sharp;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) {
      mk = mat_mul(mk, t.m);
      msk = mat_mul(msk, t.m_sharp);
    }
    for (size_t s = 0; s < t.m.rows(); ++s) {
      const CostValue& walk = mk.at(s, s);
      if (d.equal(walk, d.bot())) continue;
      std::vector<size_t> dec = decomposition(t.alpha1, s);
      for (size_t i : dec) {
        bool covered = false;
        for (size_t j : dec)
          if (d.leq(walk, msk.at(i, j))) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
    }
  }
  return true;
}

bool check_cycle_mean_bound(const LinearTriple& t, unsigned kmax) {
  validate_triple(t);
  require_selective(t, "cycle mean check");
  if (kmax == 0) throw Error("cycle mean check needs kmax >= 1");
  const auto& d = *t.m.dioid();

  // Abstract powers up to kmax * (largest decomposition), fetched lazily.
  std::vector<CostMatrix> sharp_powers{t.m_sharp};
  auto sharp_power = [&](unsigned k) -> const CostMatrix& {
    while (sharp_powers.size() < k)
      sharp_powers.push_back(mat_mul(sharp_powers.back(), t.m_sharp));
    return sharp_powers[k - 1];
  };

  CostMatrix mk = t.m;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) mk = mat_mul(mk, t.m);
    for (size_t s = 0; s < t.m.rows(); ++s) {
      const CostValue& walk = mk.at(s, s);
      if (d.equal(walk, d.bot())) continue;
      CostValue mean = d.nth_root(walk, k);
      std::vector<size_t> dec = decomposition(t.alpha1, s);
      unsigned smax = static_cast<unsigned>(dec.size());
      bool found = false;
      for (unsigned r = 1; r <= smax && !found; ++r)
        for (size_t j : dec) {
          const CostValue& loop = sharp_power(k * r).at(j, j);
          if (d.equal(loop, d.bot())) continue;
          if (d.leq(mean, d.nth_root(loop, k * r))) {
            found = true;
            break;
          }
        }
      if (!found) return false;
    }
  }
  return true;
}

TheoremReport check_theorems(const LinearTriple& t) {
  validate_triple(t);
  const auto& d = *t.m.dioid();

  TheoremReport r;
  r.gc_applicable = !t.initial.empty() && !t.finals.empty() &&
                    !t.initial_sharp.empty() && !t.finals_sharp.empty();
  if (r.gc_applicable) {
    r.gc_concrete = global_cost(t.m, t.initial, t.finals);
    r.gc_abstract = global_cost(t.m_sharp, t.initial_sharp, t.finals_sharp);
    r.gc_ok = d.leq(r.gc_concrete, r.gc_abstract);
  }

  r.rho_guaranteed = d.flags().selective;
  r.rho_concrete = long_run_cost(t.m);
  r.rho_abstract = long_run_cost(t.m_sharp);
  r.rho_ok = d.leq(r.rho_concrete, r.rho_abstract);
  return r;
}

}  // namespace tropicost
