#include "tropicost/galois.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tropicost {

namespace {

// Bit r set iff v has the unit at row r; anything except bot/unit rejects.
std::uint32_t vector_bits(const DioidPtr& d, const CostVector& v) {
  if (!v.dioid()->compatible(*d))
    throw Error("vector does not live over the lift's dioid");
  if (v.dim() > 32) throw Error("encoded vector too wide");
  std::uint32_t bits = 0;
  for (size_t r = 0; r < v.dim(); ++r) {
    if (d->equal(v.at(r), d->one()))
      bits |= std::uint32_t{1} << r;
    else if (!d->equal(v.at(r), d->bot()))
      throw Error("encoded vector entry is neither bot nor the unit");
  }
  return bits;
}

}  // namespace

DioidPtr boolean_dioid() {
  DioidParams params;
  params.universe = {"e"};
  return make_dioid(DioidKind::cup_cap, std::move(params));
}

CostVector encoded_vector(const FiniteLattice& l, size_t x, const DioidPtr& d) {
  std::uint32_t bits = l.encode(x);
  CostVector v(d, l.irreducibles().size());
  for (size_t r = 0; r < v.dim(); ++r)
    if (bits >> r & 1) v.set(r, d->one());
  return v;
}

std::optional<size_t> decode_vector(const FiniteLattice& l,
                                    const CostVector& v) {
  if (v.dim() != l.irreducibles().size())
    throw Error("vector width does not match the lattice encoding");
  return l.decode(vector_bits(v.dioid(), v));
}

GaloisLift build_galois_lift(FiniteLattice concrete, FiniteLattice abstracted,
                             std::vector<size_t> atom_image) {
  if (!concrete.is_boolean())
    throw Error("concrete lattice is not boolean: "
                "some join is not a union of atoms");
  if (atom_image.size() != concrete.atoms().size())
    throw Error("atom map must cover every concrete atom");
  for (size_t img : atom_image)
    if (img >= abstracted.size())
      throw Error("atom image out of range");

  DioidPtr d = boolean_dioid();
  const size_t rows = abstracted.irreducibles().size();
  CostMatrix alpha1(d, rows, atom_image.size());
  for (size_t c = 0; c < atom_image.size(); ++c) {
    std::uint32_t bits = abstracted.encode(atom_image[c]);
    for (size_t r = 0; r < rows; ++r)
      if (bits >> r & 1) alpha1.set(r, c, d->one());
  }

  return GaloisLift{std::move(concrete), std::move(abstracted),
                    std::move(atom_image), std::move(d), std::move(alpha1)};
}

CostVector apply_alpha1(const GaloisLift& g, const CostVector& v) {
  return mat_vec(g.alpha1, v);
}

CostVector project_pi(const GaloisLift& g, const CostVector& x) {
  if (x.dim() != g.alpha1.rows())
    throw Error("vector width does not match the abstract encoding");
  std::uint32_t xbits = vector_bits(g.dioid, x);

  // Candidates (encodings covering x) are closed under meet because the
  // encoding turns meets into intersections, so folding them with meet
  // lands on the least one. Top is always a candidate.
  const FiniteLattice& a = g.abstracted;
  size_t least = a.top();
  for (size_t cand = 0; cand < a.size(); ++cand)
    if ((a.encode(cand) & xbits) == xbits) least = a.meet(least, cand);
  return encoded_vector(a, least, g.dioid);
}

CostVector apply_gamma1(const GaloisLift& g, const CostVector& y) {
  return mat_residual(g.alpha1, y);
}

std::vector<std::string> render_alpha1(const GaloisLift& g) {
  const auto& d = *g.dioid;
  std::vector<std::string> rows;
  for (size_t r = 0; r < g.alpha1.rows(); ++r) {
    std::string row;
    for (size_t c = 0; c < g.alpha1.cols(); ++c) {
      if (c > 0) row += ' ';
      row += d.equal(g.alpha1.at(r, c), d.one()) ? 'e' : '.';
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool check_residuated_pair(const GaloisLift& g, std::string* why) {
  return check_residuated_pair_with(
      g, [&](const CostVector& x) { return project_pi(g, x); }, why);
}

bool check_residuated_pair_with(const GaloisLift& g, const PiFn& pi,
                                std::string* why) {
  const FiniteLattice& b = g.concrete;
  const FiniteLattice& a = g.abstracted;
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };

  // pi . alpha1 on every concrete element, with the range check that makes
  // a corrupted projection visible: outputs must decode into the lattice.
  std::vector<CostVector> up;
  up.reserve(b.size());
  for (size_t x = 0; x < b.size(); ++x) {
    CostVector v = pi(apply_alpha1(g, encoded_vector(b, x, g.dioid)));
    if (!decode_vector(a, v))
      return fail("projection output for " + b.name(x) +
                  " is not an encoded lattice element");
    up.push_back(std::move(v));
  }
  // gamma1 . iota on every abstract element (iota is the identity:
  // encoded abstract vectors already have the right width).
  std::vector<CostVector> down;
  down.reserve(a.size());
  for (size_t y = 0; y < a.size(); ++y)
    down.push_back(apply_gamma1(g, encoded_vector(a, y, g.dioid)));

  for (size_t y = 0; y < a.size(); ++y) {
    CostVector back = pi(apply_alpha1(g, down[y]));
    if (!decode_vector(a, back))
      return fail("projection output below " + a.name(y) +
                  " is not an encoded lattice element");
    if (!vec_leq(back, encoded_vector(a, y, g.dioid)))
      return fail("deflation law fails at " + a.name(y));
  }
  for (size_t x = 0; x < b.size(); ++x)
    if (!vec_leq(encoded_vector(b, x, g.dioid), apply_gamma1(g, up[x])))
      return fail("inflation law fails at " + b.name(x));

  for (size_t x = 0; x < b.size(); ++x)
    for (size_t y = 0; y < b.size(); ++y)
      if (b.leq(x, y) && !vec_leq(up[x], up[y]))
        return fail("pi . alpha1 is not monotone between " + b.name(x) +
                    " and " + b.name(y));
  for (size_t x = 0; x < a.size(); ++x)
    for (size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !vec_leq(down[x], down[y]))
        return fail("gamma1 . iota is not monotone between " + a.name(x) +
                    " and " + a.name(y));
  return true;
}

GaloisLift even_interval_lift(int n) {
  return build_galois_lift(FiniteLattice::powerset(integer_universe(n)),
                           even_interval_lattice(n),
                           even_interval_atom_images(n));
}

JoinLinearityReport check_linearizability_counterexample() {
  const int n = 2;
  FiniteLattice a = even_interval_lattice(n);
  std::vector<size_t> images = even_interval_atom_images(n);

  // State-map basis: bottom first, then intervals by upper bound and
  // length, both readable off the encoding (irreducibles are the singleton
  // intervals in increasing order).
  std::vector<size_t> basis{a.bottom()};
  std::vector<size_t> rest;
  for (size_t x = 0; x < a.size(); ++x)
    if (x != a.bottom()) rest.push_back(x);
  std::stable_sort(rest.begin(), rest.end(), [&](size_t x, size_t y) {
    std::uint32_t ex = a.encode(x), ey = a.encode(y);
    int ux = std::bit_width(ex), uy = std::bit_width(ey);
    if (ux != uy) return ux < uy;
    return std::popcount(ex) < std::popcount(ey);
  });
  basis.insert(basis.end(), rest.begin(), rest.end());

  std::vector<size_t> position(a.size());
  for (size_t i = 0; i < basis.size(); ++i) position[basis[i]] = i + 1;

  // Atoms -2 and 2 sit at the ends of the integer universe -n..n.
  size_t img_lo = images.front(), img_hi = images.back();
  size_t img_union = a.join(img_lo, img_hi);

  JoinLinearityReport r;
  for (size_t x : basis) r.basis.push_back(a.name(x));
  r.lhs_positions = {position[img_lo], position[img_hi]};
  std::sort(r.lhs_positions.begin(), r.lhs_positions.end());
  r.rhs_positions = {position[img_union]};
  r.linear = r.lhs_positions == r.rhs_positions;
  r.summary = "abstracting {-2} and {2} separately marks basis positions {" +
              std::to_string(r.lhs_positions[0]) + "," +
              std::to_string(r.lhs_positions[1]) +
              "}, but abstracting {-2,2} as one set lands on position {" +
              std::to_string(r.rhs_positions[0]) + "} (" +
              a.name(img_union) + "), so no state-map lift is linear here";
  return r;
}

GaloisLift parse_galois_file(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<size_t, size_t>> covers;
  std::vector<std::string> atoms;
  std::vector<std::string> images;

  size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;

    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string word;
    if (!(in >> word)) continue;

    if (word == "elements") {
      if (!elements.empty())
        throw ParseError("duplicate elements line", lineno);
      std::string name;
      while (in >> name) elements.push_back(name);
      if (elements.empty())
        throw ParseError("elements line needs at least one name", lineno);
    } else if (word == "cover") {
      std::string lo, hi, extra;
      if (!(in >> lo >> hi) || (in >> extra))
        throw ParseError("expected `cover LOW HIGH`", lineno);
      auto find = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < elements.size(); ++i)
          if (elements[i] == name) return i;
        throw ParseError("unknown element `" + name + "`", lineno);
      };
      covers.emplace_back(find(lo), find(hi));
    } else if (word == "alpha") {
      std::string atom, arrow, image, extra;
      if (!(in >> atom >> arrow >> image) || arrow != "->" || (in >> extra))
        throw ParseError("expected `alpha atom -> element`", lineno);
      for (const auto& seen : atoms)
        if (seen == atom)
          throw ParseError("atom `" + atom + "` mapped twice", lineno);
      atoms.push_back(atom);
      images.push_back(image);
    } else {
      throw ParseError("unknown directive `" + word + "`", lineno);
    }
  }

  if (elements.empty()) throw Error("lattice file has no elements line");
  if (atoms.empty()) throw Error("lattice file has no alpha lines");

  FiniteLattice abstracted = FiniteLattice::from_covers(elements, covers);
  std::vector<size_t> atom_image;
  for (const auto& image : images) {
    auto id = abstracted.find(image);
    if (!id) throw Error("alpha image `" + image + "` is not an element");
    atom_image.push_back(*id);
  }
  return build_galois_lift(FiniteLattice::powerset(std::move(atoms)),
                           std::move(abstracted), std::move(atom_image));
}

}  // namespace tropicost
