#include "tropicost/longrun.hpp"

namespace tropicost {

CostValue average_path_cost(const TransitionSystem& p,
                            const std::vector<size_t>& path) {
  if (path.size() < 2) throw Error("a path needs at least one transition");
  const CostDioid& d = *p.dioid;
  CostValue acc = d.one();
  for (size_t i = 0; i + 1 < path.size(); ++i)
    acc = d.otimes(acc, p.matrix.at(path[i], path[i + 1]));
  return d.nth_root(acc, static_cast<unsigned>(path.size() - 1));
}

CostValue long_run_cost(const CostMatrix& m) {
  if (m.rows() != m.cols()) throw Error("long_run_cost needs a square matrix");
  const CostDioid& d = *m.dioid();
  CostValue acc = d.bot();
  CostMatrix power = m;
  for (size_t k = 1; k <= m.rows(); ++k) {
    if (k > 1) power = mat_mul(power, m);
    acc = d.oplus(acc, d.nth_root(trace(power), static_cast<unsigned>(k)));
  }
  return acc;
}

CostValue long_run_cost(const TransitionSystem& p) {
  return long_run_cost(reachable_restrict(p).matrix);
}

}  // namespace tropicost
