#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropicost/error.hpp"
#include "tropicost/value.hpp"

namespace tropicost {

enum class DioidKind {
  minmax,       // rationals with +-inf, oplus = min, otimes = max
  maxmin,       // rationals with +-inf, oplus = max, otimes = min
  cap_cup,      // subsets of a universe, oplus = intersection, otimes = union
  cup_cap,      // subsets of a universe, oplus = union, otimes = intersection
  minplus_vec,  // tuples of nonnegative rationals, cw min / cw sum
  maxtimes,     // nonnegative rationals with +inf, max / product
  maxplus,      // rationals with +-inf, max / sum
  minplus,      // rationals with +-inf, min / sum
};

struct DioidFlags {
  bool selective = false;          // a oplus b is always one of a, b
  bool double_idempotent = false;  // otimes idempotent as well
  bool cancellative = false;       // otimes cancels on finite elements
};

struct DioidParams {
  std::vector<std::string> universe;  // required by the set carriers
  int vec_dim = 0;                    // required by minplus_vec
  // Relative tolerance for the one inexact operation in the suite: the
  // maxtimes nth root. Everything else is exact.
  mpq_class root_tolerance = mpq_class(1, 1000000000);
};

// Complete idempotent commutative semiring with the extras the analyses
// need: the induced order, nth roots, star, residuals and the lattice meet.
// Instances are immutable; share them freely.
class CostDioid {
 public:
  CostDioid(DioidKind kind, DioidParams params);

  DioidKind kind() const { return kind_; }
  const DioidFlags& flags() const { return flags_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& universe() const { return params_.universe; }
  int vec_dim() const { return params_.vec_dim; }
  const mpq_class& root_tolerance() const { return params_.root_tolerance; }

  // The order induced by oplus is total for these kinds even when the
  // selectivity flag is off (min and max always pick an argument).
  bool totally_ordered() const;

  const CostValue& bot() const { return bot_; }  // neutral of oplus, absorbs otimes
  const CostValue& top() const { return top_; }  // join of the whole carrier
  const CostValue& one() const { return one_; }  // neutral of otimes

  CostValue oplus(const CostValue& a, const CostValue& b) const;
  CostValue otimes(const CostValue& a, const CostValue& b) const;
  bool leq(const CostValue& a, const CostValue& b) const;
  bool equal(const CostValue& a, const CostValue& b) const;
  // Greatest lower bound in the induced order (the carrier is a complete
  // lattice); used by residuals.
  CostValue meet(const CostValue& a, const CostValue& b) const;

  // otimes iterated n times; power(a, 0) is one().
  CostValue power(const CostValue& a, unsigned n) const;
  // The unique x with power(x, n) == a. Exact except in maxtimes, where the
  // result is a rational within root_tolerance (relative) of the real root.
  CostValue nth_root(const CostValue& a, unsigned n) const;

  // Join of all powers of a (including the empty one). Returns one() when
  // a <= one(); on the totally ordered carriers any other a certifies
  // divergence and the result is top(). The fallback iteration refuses to
  // guess: hitting its cap raises Error instead of returning top().
  CostValue star(const CostValue& a) const;

  // Greatest x with otimes(a, x) <= b.
  CostValue residual(const CostValue& a, const CostValue& b) const;

  // Carrier-checked constructors and literal syntax. parse_value accepts
  // "bot"/"top", rationals, "inf"/"-inf" where the carrier has them,
  // "{a,b}" for sets and "(1,2/3)" for tuples.
  CostValue from_rational(mpq_class q) const;
  CostValue from_scalar(ExtRat r) const;
  CostValue set_of(std::span<const std::string> members) const;
  CostValue vec_of(std::vector<mpq_class> comps) const;
  CostValue parse_value(std::string_view text) const;
  std::string to_string(const CostValue& v) const;

  // Throws Error when v does not belong to this carrier.
  void validate(const CostValue& v) const;

  // Same kind and same parameters: values may be mixed.
  bool compatible(const CostDioid& other) const;

 private:
  CostValue check(CostValue v) const;

  DioidKind kind_;
  DioidParams params_;
  DioidFlags flags_;
  std::string name_;
  CostValue bot_, top_, one_;
};

using DioidPtr = std::shared_ptr<const CostDioid>;

DioidPtr make_dioid(DioidKind kind, DioidParams params = {});
// Accepts the file-format spellings: "maxplus", "cap-cup", "minplus_vec(3)".
DioidPtr make_dioid(std::string_view name, DioidParams params = {});

const char* kind_name(DioidKind kind);
std::vector<DioidKind> all_dioid_kinds();

}  // namespace tropicost
