#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropicost/error.hpp"

namespace tropicost {

// A finite lattice with a set encoding: every element maps to the set of
// join-irreducible elements below it, one bit per irreducible. The encoding
// is an order embedding (x <= y iff encode(x) is a subset of encode(y)) and
// turns meets into intersections exactly; joins become unions only where
// the lattice is boolean, which is the whole point of the projection built
// on top of it.
//
// Two representations share the interface: powersets keep elements as raw
// bitmasks (no tables, sizes up to 2^20), while arbitrary lattices store
// the order relation and join/meet tables explicitly.
class FiniteLattice {
 public:
  // Powerset of the given atom names; element ids are subset masks.
  static FiniteLattice powerset(std::vector<std::string> atom_names);

  // Arbitrary lattice from an explicit order relation. Validates that leq
  // is a partial order and that all binary joins and meets exist.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  std::vector<std::vector<char>> leq);

  // Same, with the order given as covering pairs (lo, hi); the relation is
  // their reflexive-transitive closure.
  static FiniteLattice from_covers(
      std::vector<std::string> names,
      const std::vector<std::pair<size_t, size_t>>& covers);

  size_t size() const;
  const std::string& name(size_t x) const;       // display name
  std::optional<size_t> find(std::string_view name) const;

  bool leq(size_t x, size_t y) const;
  size_t join(size_t x, size_t y) const;
  size_t meet(size_t x, size_t y) const;
  size_t bottom() const { return bottom_; }
  size_t top() const { return top_; }

  // Elements covering bottom.
  const std::vector<size_t>& atoms() const { return atoms_; }
  // Join-irreducible elements (exactly one lower cover), in element order;
  // row r of every encoding refers to irreducibles()[r].
  const std::vector<size_t>& irreducibles() const { return irr_; }

  std::uint32_t encode(size_t x) const;
  // The element whose encoding is exactly bits, if any.
  std::optional<size_t> decode(std::uint32_t bits) const;

  // Isomorphic to the powerset of its atoms, with joins acting as unions.
  bool is_boolean() const;

 private:
  FiniteLattice() = default;

  bool mask_mode_ = false;
  std::vector<std::string> atom_names_;  // mask mode
  mutable std::vector<std::string> name_cache_;

  std::vector<std::string> names_;  // table mode
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<std::uint32_t>> join_, meet_;
  size_t bottom_ = 0, top_ = 0;
  std::vector<size_t> atoms_, irr_;
  std::vector<std::uint32_t> enc_;
};

// The per-element atom masks of a boolean lattice: atoms map to unit
// vectors and every element to the union of the atoms below it. Throws
// when some join is not a union of atoms.
std::vector<std::uint32_t> encode_boolean(const FiniteLattice& b);

// The lattice of intervals with even bounds inside [-n, n], plus the empty
// interval as bottom, ordered by inclusion. Elements are listed bottom
// first, then by interval length and lower bound; its join-irreducibles
// are the singleton intervals [-n], ..., [n].
FiniteLattice even_interval_lattice(int n);

// Atom names "-n", ..., "n" of the concrete powerset the even-interval
// abstraction starts from.
std::vector<std::string> integer_universe(int n);

// Image of each integer atom under the even-interval abstraction: even i
// maps to the point interval [i], odd i to [i-1, i+1]. Indices align with
// integer_universe(n); values are element ids of even_interval_lattice(n).
std::vector<size_t> even_interval_atom_images(int n);

}  // namespace tropicost
