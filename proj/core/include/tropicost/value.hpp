#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tropicost/rational.hpp"

namespace tropicost {

// Subset of a declared universe, one bit per member. The universe itself
// (member names, size) lives in the owning dioid.
struct SetBits {
  std::uint32_t bits = 0;
  friend bool operator==(SetBits a, SetBits b) = default;
};

// Element of the componentwise min-plus carrier: either the single global
// infinity (bottom) or a tuple of nonnegative rationals.
struct VecRat {
  bool bottom = false;
  std::vector<mpq_class> comps;

  friend bool operator==(const VecRat& a, const VecRat& b) {
    if (a.bottom || b.bottom) return a.bottom == b.bottom;
    return a.comps == b.comps;
  }
};

// A cost: exactly one of the three carrier families. Which family is valid,
// and what the value means, is determined by the dioid it belongs to; values
// never travel between incompatible dioids (the ops check).
class CostValue {
 public:
  CostValue() : v_(ExtRat()) {}
  explicit CostValue(ExtRat r) : v_(std::move(r)) {}
  explicit CostValue(SetBits s) : v_(s) {}
  explicit CostValue(VecRat v) : v_(std::move(v)) {}

  bool is_scalar() const { return std::holds_alternative<ExtRat>(v_); }
  bool is_set() const { return std::holds_alternative<SetBits>(v_); }
  bool is_vec() const { return std::holds_alternative<VecRat>(v_); }

  const ExtRat& scalar() const { return std::get<ExtRat>(v_); }
  const SetBits& set() const { return std::get<SetBits>(v_); }
  const VecRat& vec() const { return std::get<VecRat>(v_); }

  friend bool operator==(const CostValue& a, const CostValue& b) {
    return a.v_ == b.v_;
  }

 private:
  std::variant<ExtRat, SetBits, VecRat> v_;
};

}  // namespace tropicost
