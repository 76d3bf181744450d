#include "tropicost/analysis.hpp"

#include "tropicost/closure.hpp"

namespace tropicost {

CostValue global_cost(const CostMatrix& m, const std::vector<size_t>& initial,
                      const std::vector<size_t>& finals) {
  CostMatrix closed = kleene_plus(m);
  CostValue acc = m.dioid()->bot();
  for (size_t i : initial)
    for (size_t f : finals) acc = m.dioid()->oplus(acc, closed.at(i, f));
  return acc;
}

CostValue global_cost(const TransitionSystem& p) {
  return global_cost(p.matrix, p.initial, p.finals);
}

}  // namespace tropicost
