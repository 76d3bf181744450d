#include "tropicost/closure.hpp"

namespace tropicost {

CostMatrix kleene_plus(const CostMatrix& m) {
  if (m.rows() != m.cols()) throw Error("kleene_plus needs a square matrix");
  const CostDioid& d = *m.dioid();
  size_t n = m.rows();
  CostMatrix a = m;
  for (size_t k = 0; k < n; ++k) {
    CostMatrix prev = a;
    CostValue s = d.star(prev.at(k, k));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        CostValue through =
            d.otimes(prev.at(i, k), d.otimes(s, prev.at(k, j)));
        a.set(i, j, d.oplus(prev.at(i, j), std::move(through)));
      }
  }
  return a;
}

}  // namespace tropicost
