#pragma once

#include <vector>

#include "tropicost/dioid.hpp"

namespace tropicost {

// Dense vector over a cost dioid. Indices are 0-based.
class CostVector {
 public:
  CostVector(DioidPtr dioid, size_t dim);
  CostVector(DioidPtr dioid, std::vector<CostValue> cells);

  const DioidPtr& dioid() const { return dioid_; }
  size_t dim() const { return cells_.size(); }
  const CostValue& at(size_t i) const { return cells_.at(i); }
  void set(size_t i, CostValue v);

  friend bool operator==(const CostVector& a, const CostVector& b) {
    return a.cells_ == b.cells_;
  }

 private:
  DioidPtr dioid_;
  std::vector<CostValue> cells_;
};

// Dense row-major matrix over a cost dioid.
class CostMatrix {
 public:
  CostMatrix(DioidPtr dioid, size_t rows, size_t cols);  // all bottom

  static CostMatrix identity(DioidPtr dioid, size_t n);

  const DioidPtr& dioid() const { return dioid_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const CostValue& at(size_t i, size_t j) const;
  void set(size_t i, size_t j, CostValue v);

  friend bool operator==(const CostMatrix& a, const CostMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  DioidPtr dioid_;
  size_t rows_, cols_;
  std::vector<CostValue> cells_;
};

CostMatrix mat_add(const CostMatrix& a, const CostMatrix& b);
CostMatrix mat_mul(const CostMatrix& a, const CostMatrix& b);
CostVector mat_vec(const CostMatrix& a, const CostVector& v);
// Entrywise order.
bool mat_leq(const CostMatrix& a, const CostMatrix& b);
bool vec_leq(const CostVector& a, const CostVector& b);
CostVector vec_add(const CostVector& a, const CostVector& b);
// k >= 1.
CostMatrix mat_power(const CostMatrix& a, unsigned k);
CostValue trace(const CostMatrix& a);
CostMatrix transpose(const CostMatrix& a);

// Greatest v with mat_vec(a, v) <= y, taken entrywise through the element
// residual. Exists because the carrier is a complete lattice.
CostVector mat_residual(const CostMatrix& a, const CostVector& y);

}  // namespace tropicost
