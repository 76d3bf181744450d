#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropicost/lattice.hpp"
#include "tropicost/matrix.hpp"

namespace tropicost {

// The two-element dioid {bot, e} that encoded lattice vectors live over.
DioidPtr boolean_dioid();

// Encoding of element x as a vector over d: unit entries at the rows of the
// irreducibles below x.
CostVector encoded_vector(const FiniteLattice& l, size_t x, const DioidPtr& d);

// Inverse of encoded_vector where one exists: the element whose encoding is
// exactly v. Entries of v must be bot or the unit.
std::optional<size_t> decode_vector(const FiniteLattice& l,
                                    const CostVector& v);

// A lattice Galois connection turned into linear algebra: the concrete
// boolean lattice contributes an atom basis, the abstract lattice its
// irreducible basis, and the abstraction becomes the matrix alpha1 whose
// column for atom b is the encoding of the atom's image. Joins the abstract
// lattice cannot express are patched up by the projection pi (the least
// encoded element above a vector), and gamma1 is the residual of alpha1.
struct GaloisLift {
  FiniteLattice concrete;  // boolean; its atoms index alpha1's columns
  FiniteLattice abstracted;
  std::vector<size_t> atom_image;  // concrete atom -> abstract element
  DioidPtr dioid;                  // boolean_dioid()
  CostMatrix alpha1;               // |irr(abstracted)| x |atoms(concrete)|
};

// Requires a boolean concrete lattice and a total atom map.
GaloisLift build_galois_lift(FiniteLattice concrete, FiniteLattice abstracted,
                             std::vector<size_t> atom_image);

// The three maps of the lift. apply_alpha1 is plain matrix action;
// project_pi picks the least encoded abstract element above x (it exists:
// candidates always include top and are closed under meet, so their meet
// is one of them); apply_gamma1 is the matrix residual, the greatest
// vector alpha1 maps below y.
CostVector apply_alpha1(const GaloisLift& g, const CostVector& v);
CostVector project_pi(const GaloisLift& g, const CostVector& x);
CostVector apply_gamma1(const GaloisLift& g, const CostVector& y);

// One row per abstract irreducible, entries `e` / `.` separated by spaces.
std::vector<std::string> render_alpha1(const GaloisLift& g);

// Residuation of the composed pair (pi after alpha1, gamma1), checked
// exhaustively over both lattices:
//   - pi(alpha1(gamma1(enc a))) <= enc a          for every abstract a,
//   - enc b <= gamma1(pi(alpha1(enc b)))          for every concrete b,
//   - both composites monotone on all comparable pairs,
//   - every pi output decodes to an abstract element.
// The _with variant substitutes a custom projection, letting callers probe
// how the laws fail when pi is not a proper closure.
using PiFn = std::function<CostVector(const CostVector&)>;

bool check_residuated_pair(const GaloisLift& g, std::string* why = nullptr);
bool check_residuated_pair_with(const GaloisLift& g, const PiFn& pi,
                                std::string* why = nullptr);

// The even-interval worked example: powerset of the integers -n..n
// abstracted into intervals with even bounds.
GaloisLift even_interval_lift(int n);

// What goes wrong without the projection: treating the 7 even intervals
// (n=2) directly as a state space and lifting the abstraction like a state
// map sends {-2} and {2} to unit vectors whose join differs from the image
// of {-2,2}. Positions are 1-based into `basis`, which lists the interval
// elements ordered by upper bound then length (bottom first).
struct JoinLinearityReport {
  bool linear = false;
  std::vector<std::string> basis;
  std::vector<size_t> lhs_positions;  // units of alpha(r{-2}) + alpha(r{2})
  std::vector<size_t> rhs_positions;  // units of alpha(r{-2,2})
  std::string summary;
};

JoinLinearityReport check_linearizability_counterexample();

// CLI lattice description:
//
//   elements bot lo hi top
//   cover bot lo
//   cover bot hi
//   cover lo top
//   cover hi top
//   alpha x -> lo
//
// `alpha` lines both declare the concrete atoms (in order) and map them;
// the concrete lattice is the powerset of those atoms.
GaloisLift parse_galois_file(std::string_view text);

}  // namespace tropicost
