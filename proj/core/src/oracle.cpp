#include "tropicost/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tropicost/error.hpp"

namespace tropicost {

namespace {

constexpr std::uint64_t kDefaultBudget = 1000000;

struct Budget {
  std::uint64_t left;

  void spend() {
    if (left == 0)
      throw BudgetError(
          "walk enumeration budget exceeded "
          "(raise TROPICOST_WALK_BUDGET or shrink the instance)");
    --left;
  }
};

std::vector<std::vector<size_t>> successors(const TransitionSystem& p) {
  const auto& d = *p.dioid;
  std::vector<std::vector<size_t>> succ(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (!d.equal(p.matrix.at(i, j), d.bot())) succ[i].push_back(j);
  return succ;
}

// Depth-first enumeration of every walk from src with 1..max_len
// transitions along the given adjacency. The callback sees the full state
// sequence (src first) and the accumulated cost each time a transition is
// appended; each transition costs one budget unit.
template <class Fn>
void walk_dfs(const TransitionSystem& p,
              const std::vector<std::vector<size_t>>& succ, size_t src,
              unsigned max_len, Budget& budget, Fn&& fn) {
  const auto& d = *p.dioid;
  std::vector<size_t> walk{src};
  std::vector<CostValue> costs{d.one()};

  struct Rec {
    const TransitionSystem& p;
    const std::vector<std::vector<size_t>>& succ;
    unsigned max_len;
    Budget& budget;
    std::vector<size_t>& walk;
    std::vector<CostValue>& costs;
    Fn& fn;

    void go() {
      if (walk.size() - 1 >= max_len) return;
      size_t cur = walk.back();
      for (size_t t : succ[cur]) {
        budget.spend();
        walk.push_back(t);
        costs.push_back(p.dioid->otimes(costs.back(), p.matrix.at(cur, t)));
        fn(walk, costs.back());
        go();
        walk.pop_back();
        costs.pop_back();
      }
    }
  };

  Rec{p, succ, max_len, budget, walk, costs, fn}.go();
}

CostValue walk_cost(const TransitionSystem& p, const std::vector<size_t>& w) {
  const auto& d = *p.dioid;
  CostValue c = d.one();
  for (size_t k = 0; k + 1 < w.size(); ++k)
    c = d.otimes(c, p.matrix.at(w[k], w[k + 1]));
  return c;
}

bool contains(const std::vector<size_t>& sorted, size_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Reflexive-transitive reachability over non-bottom edges.
std::vector<std::vector<char>> reach_matrix(
    const std::vector<std::vector<size_t>>& succ) {
  const size_t n = succ.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    r[i][i] = 1;
    for (size_t j : succ[i]) r[i][j] = 1;
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

}  // namespace

std::uint64_t walk_budget_from_env() {
  const char* s = std::getenv("TROPICOST_WALK_BUDGET");
  if (s == nullptr || *s == '\0') return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) return kDefaultBudget;
  return v;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

long SplitMix64::next_in(long lo, long hi) {
  if (lo > hi) throw Error("SplitMix64::next_in: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

CostValue random_cost(const CostDioid& d, SplitMix64& rng, long num_lo,
                      long num_hi, long den_hi) {
  if (num_lo > num_hi || den_hi < 1) throw Error("bad cost sampling range");
  if (d.kind() == DioidKind::maxtimes || d.kind() == DioidKind::minplus_vec)
    num_lo = std::max(num_lo, 0L);

  auto sample_rational = [&] {
    long num = rng.next_in(num_lo, num_hi);
    long den = rng.next_in(1, den_hi);
    return mpq_class(num, den);
  };
  switch (d.kind()) {
    case DioidKind::cap_cup:
    case DioidKind::cup_cap: {
      std::vector<std::string> members;
      for (const auto& m : d.universe())
        if (rng.next() & 1) members.push_back(m);
      return d.set_of(members);
    }
    case DioidKind::minplus_vec: {
      std::vector<mpq_class> comps;
      for (int k = 0; k < d.vec_dim(); ++k) comps.push_back(sample_rational());
      return d.vec_of(std::move(comps));
    }
    default:
      return d.from_rational(sample_rational());
  }
}

TransitionSystem random_system(const RandomSystemSpec& spec) {
  if (spec.states <= 0) throw Error("random_system: need at least one state");
  if (spec.num_lo > spec.num_hi || spec.den_hi < 1)
    throw Error("random_system: bad sampling range");

  DioidParams params = spec.params;
  if ((spec.kind == DioidKind::cap_cup || spec.kind == DioidKind::cup_cap) &&
      params.universe.empty())
    params.universe = {"p", "q", "r", "s"};
  if (spec.kind == DioidKind::minplus_vec && params.vec_dim == 0)
    params.vec_dim = 2;
  DioidPtr d = make_dioid(spec.kind, params);

  const size_t n = static_cast<size_t>(spec.states);
  std::vector<std::string> names;
  names.reserve(n);
  for (size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));

  SplitMix64 rng{spec.seed};

  // Draw order is part of the contract: edges row-major, then the initial
  // set, then the final set. Same spec, same system.
  CostMatrix m(d, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool present = rng.next_unit() < spec.density;
      if (present)
        m.set(i, j,
              random_cost(*d, rng, spec.num_lo, spec.num_hi, spec.den_hi));
    }

  auto sample_subset = [&] {
    std::vector<size_t> out;
    for (size_t i = 0; i < n; ++i)
      if (rng.next() & 1) out.push_back(i);
    if (out.empty()) out.push_back(static_cast<size_t>(rng.next() % n));
    return out;
  };
  std::vector<size_t> initial = sample_subset();
  std::vector<size_t> finals = sample_subset();

  TransitionSystem p = make_system(d, std::move(names), std::move(initial),
                                   std::move(finals));
  p.matrix = std::move(m);
  return p;
}

std::vector<WalkRecord> enumerate_paths(const TransitionSystem& p, size_t src,
                                        size_t dst, unsigned max_len,
                                        std::uint64_t budget) {
  if (src >= p.size() || dst >= p.size())
    throw Error("enumerate_paths: state index out of range");
  Budget b{budget != 0 ? budget : walk_budget_from_env()};
  auto succ = successors(p);
  std::vector<WalkRecord> out;
  walk_dfs(p, succ, src, max_len, b,
           [&](const std::vector<size_t>& walk, const CostValue& cost) {
             if (walk.back() == dst) out.push_back({walk, cost});
           });
  return out;
}

CostValue sum_walk_costs(const TransitionSystem& p, size_t src, size_t dst,
                         unsigned max_len, std::uint64_t budget) {
  if (src >= p.size() || dst >= p.size())
    throw Error("sum_walk_costs: state index out of range");
  const auto& d = *p.dioid;
  Budget b{budget != 0 ? budget : walk_budget_from_env()};
  auto succ = successors(p);
  CostValue acc = d.bot();
  walk_dfs(p, succ, src, max_len, b,
           [&](const std::vector<size_t>& walk, const CostValue& cost) {
             if (walk.back() == dst) acc = d.oplus(acc, cost);
           });
  return acc;
}

CostValue bounded_trace_costs(const TransitionSystem& p, unsigned max_len,
                              std::uint64_t budget) {
  const auto& d = *p.dioid;
  Budget b{budget != 0 ? budget : walk_budget_from_env()};
  auto succ = successors(p);
  CostValue acc = d.bot();
  for (size_t src : p.initial)
    walk_dfs(p, succ, src, max_len, b,
             [&](const std::vector<size_t>& walk, const CostValue& cost) {
               if (contains(p.finals, walk.back())) acc = d.oplus(acc, cost);
             });
  return acc;
}

CostValue cycle_means_oracle(const TransitionSystem& p, unsigned max_len,
                             std::uint64_t budget) {
  const auto& d = *p.dioid;
  Budget b{budget != 0 ? budget : walk_budget_from_env()};
  std::vector<size_t> reach = reachable_states(p);
  if (max_len == 0) max_len = static_cast<unsigned>(reach.size());

  // The reachable set is closed under successors, so walks started inside
  // it stay inside it; no filtering needed beyond the start states.
  auto succ = successors(p);
  CostValue acc = d.bot();
  for (size_t v : reach)
    walk_dfs(p, succ, v, max_len, b,
             [&](const std::vector<size_t>& walk, const CostValue& cost) {
               if (walk.back() == v)
                 acc = d.oplus(acc, d.nth_root(
                                        cost,
                                        static_cast<unsigned>(walk.size() - 1)));
             });
  return acc;
}

std::vector<std::vector<size_t>> simple_cycles(const TransitionSystem& p) {
  const size_t n = p.size();
  auto succ = successors(p);
  std::vector<std::vector<size_t>> out;

  // Cycles grouped by their smallest state r: intermediates are distinct
  // states above r, so each cycle appears exactly once.
  std::vector<char> on_path(n, 0);
  std::vector<size_t> path;

  struct Rec {
    const std::vector<std::vector<size_t>>& succ;
    std::vector<char>& on_path;
    std::vector<size_t>& path;
    std::vector<std::vector<size_t>>& out;
    size_t root;

    void go(size_t cur) {
      for (size_t t : succ[cur]) {
        if (t == root) {
          std::vector<size_t> cyc = path;
          cyc.push_back(root);
          out.push_back(std::move(cyc));
        } else if (t > root && !on_path[t]) {
          on_path[t] = 1;
          path.push_back(t);
          go(t);
          path.pop_back();
          on_path[t] = 0;
        }
      }
    }
  };

  for (size_t r = 0; r < n; ++r) {
    path = {r};
    Rec{succ, on_path, path, out, r}.go(r);
  }
  return out;
}

CostMatrix closure_oracle(const TransitionSystem& p, std::uint64_t budget) {
  const auto& d = *p.dioid;
  const size_t n = p.size();
  Budget b{budget != 0 ? budget : walk_budget_from_env()};
  auto succ = successors(p);

  // A cycle whose cost is not below the unit pumps without bound, so every
  // walk able to pass through it joins to top. On the other carriers every
  // element sits below the unit and such a cycle cannot exist; seeing one
  // means the matrix escaped its carrier, which is worth a loud failure.
  std::vector<char> pumping(n, 0);
  bool any_pumping = false;
  for (const auto& cyc : simple_cycles(p)) {
    if (d.leq(walk_cost(p, cyc), d.one())) continue;
    if (!d.totally_ordered())
      throw Error("closure_oracle: diverging cycle on a carrier where "
                  "every element is below the unit");
    any_pumping = true;
    for (size_t v : cyc) pumping[v] = 1;
  }

  std::vector<std::vector<char>> reach;
  if (any_pumping) reach = reach_matrix(succ);
  auto pumps_between = [&](size_t i, size_t j) {
    if (!any_pumping) return false;
    for (size_t v = 0; v < n; ++v)
      if (pumping[v] && reach[i][v] && reach[v][j]) return true;
    return false;
  };

  // Away from the pumping region, walks longer than n only insert extra
  // cycles, each costing at most the unit, so the join over walks of
  // length at most n is already the closure.
  CostMatrix out(p.dioid, n, n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<CostValue> acc(n, d.bot());
    walk_dfs(p, succ, i, static_cast<unsigned>(n), b,
             [&](const std::vector<size_t>& walk, const CostValue& cost) {
               size_t j = walk.back();
               acc[j] = d.oplus(acc[j], cost);
             });
    for (size_t j = 0; j < n; ++j)
      out.set(i, j, pumps_between(i, j) ? d.top() : acc[j]);
  }
  return out;
}

}  // namespace tropicost
