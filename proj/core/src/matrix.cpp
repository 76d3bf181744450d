#include "tropicost/matrix.hpp"

namespace tropicost {

namespace {

void need(bool cond, const char* msg) {
  if (!cond) throw Error(msg);
}

void same_algebra(const DioidPtr& a, const DioidPtr& b) {
  need(a && b, "missing dioid");
  need(a->compatible(*b), "operands live in different dioids");
}

}  // namespace

CostVector::CostVector(DioidPtr dioid, size_t dim) : dioid_(std::move(dioid)) {
  need(dioid_ != nullptr, "missing dioid");
  cells_.assign(dim, dioid_->bot());
}

CostVector::CostVector(DioidPtr dioid, std::vector<CostValue> cells)
    : dioid_(std::move(dioid)), cells_(std::move(cells)) {
  need(dioid_ != nullptr, "missing dioid");
  for (const auto& c : cells_) dioid_->validate(c);
}

void CostVector::set(size_t i, CostValue v) {
  dioid_->validate(v);
  cells_.at(i) = std::move(v);
}

CostMatrix::CostMatrix(DioidPtr dioid, size_t rows, size_t cols)
    : dioid_(std::move(dioid)), rows_(rows), cols_(cols) {
  need(dioid_ != nullptr, "missing dioid");
  need(rows > 0 && cols > 0, "matrix dimensions must be positive");
  cells_.assign(rows * cols, dioid_->bot());
}

CostMatrix CostMatrix::identity(DioidPtr dioid, size_t n) {
  CostMatrix m(std::move(dioid), n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, m.dioid()->one());
  return m;
}

const CostValue& CostMatrix::at(size_t i, size_t j) const {
  need(i < rows_ && j < cols_, "matrix index out of range");
  return cells_[i * cols_ + j];
}

void CostMatrix::set(size_t i, size_t j, CostValue v) {
  need(i < rows_ && j < cols_, "matrix index out of range");
  dioid_->validate(v);
  cells_[i * cols_ + j] = std::move(v);
}

CostMatrix mat_add(const CostMatrix& a, const CostMatrix& b) {
  same_algebra(a.dioid(), b.dioid());
  need(a.rows() == b.rows() && a.cols() == b.cols(),
       "mat_add dimension mismatch");
  CostMatrix r(a.dioid(), a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      r.set(i, j, a.dioid()->oplus(a.at(i, j), b.at(i, j)));
  return r;
}

CostMatrix mat_mul(const CostMatrix& a, const CostMatrix& b) {
  same_algebra(a.dioid(), b.dioid());
  need(a.cols() == b.rows(), "mat_mul dimension mismatch");
  const CostDioid& d = *a.dioid();
  CostMatrix r(a.dioid(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) {
      CostValue acc = d.bot();
      for (size_t k = 0; k < a.cols(); ++k)
        acc = d.oplus(acc, d.otimes(a.at(i, k), b.at(k, j)));
      r.set(i, j, std::move(acc));
    }
  return r;
}

CostVector mat_vec(const CostMatrix& a, const CostVector& v) {
  same_algebra(a.dioid(), v.dioid());
  need(a.cols() == v.dim(), "mat_vec dimension mismatch");
  const CostDioid& d = *a.dioid();
  CostVector r(a.dioid(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    CostValue acc = d.bot();
    for (size_t k = 0; k < a.cols(); ++k)
      acc = d.oplus(acc, d.otimes(a.at(i, k), v.at(k)));
    r.set(i, std::move(acc));
  }
  return r;
}

bool mat_leq(const CostMatrix& a, const CostMatrix& b) {
  same_algebra(a.dioid(), b.dioid());
  need(a.rows() == b.rows() && a.cols() == b.cols(),
       "mat_leq dimension mismatch");
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a.dioid()->leq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

bool vec_leq(const CostVector& a, const CostVector& b) {
  same_algebra(a.dioid(), b.dioid());
  need(a.dim() == b.dim(), "vec_leq dimension mismatch");
  for (size_t i = 0; i < a.dim(); ++i)
    if (!a.dioid()->leq(a.at(i), b.at(i))) return false;
  return true;
}

CostVector vec_add(const CostVector& a, const CostVector& b) {
  same_algebra(a.dioid(), b.dioid());
  need(a.dim() == b.dim(), "vec_add dimension mismatch");
  CostVector r(a.dioid(), a.dim());
  for (size_t i = 0; i < a.dim(); ++i)
    r.set(i, a.dioid()->oplus(a.at(i), b.at(i)));
  return r;
}

CostMatrix mat_power(const CostMatrix& a, unsigned k) {
  need(a.rows() == a.cols(), "mat_power needs a square matrix");
  need(k >= 1, "mat_power needs k >= 1");
  CostMatrix acc = a;
  for (unsigned i = 1; i < k; ++i) acc = mat_mul(acc, a);
  return acc;
}

CostValue trace(const CostMatrix& a) {
  need(a.rows() == a.cols(), "trace needs a square matrix");
  CostValue acc = a.dioid()->bot();
  for (size_t i = 0; i < a.rows(); ++i)
    acc = a.dioid()->oplus(acc, a.at(i, i));
  return acc;
}

CostMatrix transpose(const CostMatrix& a) {
  CostMatrix r(a.dioid(), a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
  return r;
}

CostVector mat_residual(const CostMatrix& a, const CostVector& y) {
  same_algebra(a.dioid(), y.dioid());
  need(a.rows() == y.dim(), "mat_residual dimension mismatch");
  const CostDioid& d = *a.dioid();
  CostVector v(a.dioid(), a.cols());
  // Row i demands a[i][j] (x) v[j] <= y[i] for every j; a join is below y
  // exactly when every summand is, so each v[j] is a meet of residuals.
  for (size_t j = 0; j < a.cols(); ++j) {
    CostValue acc = d.top();
    for (size_t i = 0; i < a.rows(); ++i)
      acc = d.meet(acc, d.residual(a.at(i, j), y.at(i)));
    v.set(j, std::move(acc));
  }
  return v;
}

}  // namespace tropicost
