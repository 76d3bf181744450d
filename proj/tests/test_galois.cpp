#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropicost/galois.hpp"

using namespace tropicost;

namespace {

// All 2^k vectors over {bot, one} of the given width.
std::vector<CostVector> unit_vectors(const DioidPtr& d, size_t width) {
  std::vector<CostVector> out;
  for (std::uint32_t bits = 0; bits < (1u << width); ++bits) {
    CostVector v(d, width);
    for (size_t i = 0; i < width; ++i)
      if (bits & (1u << i)) v.set(i, d->one());
    out.push_back(std::move(v));
  }
  return out;
}

bool unit_at(const GaloisLift& g, const CostVector& v, size_t i) {
  return g.dioid->equal(v.at(i), g.dioid->one());
}

}  // namespace

TEST_CASE("abstraction matrix of the even-interval connection") {
  GaloisLift g = even_interval_lift(2);
  std::vector<std::string> rows = render_alpha1(g);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "e e . . .");
  CHECK(rows[1] == ". e e e .");
  CHECK(rows[2] == ". . . e e");
}

TEST_CASE("projection completes irreducible marks to an element image") {
  GaloisLift g = even_interval_lift(2);
  const auto& d = *g.dioid;

  // marks for [-2] and [2] but not [0]: no interval matches, the projection
  // widens to the cover [-2,2], which marks everything
  CostVector v(g.dioid, 3);
  v.set(0, d.one());
  v.set(2, d.one());
  CostVector pv = project_pi(g, v);
  for (size_t i = 0; i < 3; ++i) CHECK(unit_at(g, pv, i));
  auto elem = decode_vector(g.abstracted, pv);
  REQUIRE(elem.has_value());
  CHECK(g.abstracted.name(*elem) == "[-2,2]");

  // projection is a closure: idempotent, inflationary, monotone
  for (const CostVector& x : unit_vectors(g.dioid, 3)) {
    CostVector px = project_pi(g, x);
    CHECK(vec_leq(x, px));
    CHECK(project_pi(g, px) == px);
    CHECK(decode_vector(g.abstracted, px).has_value());
    for (const CostVector& y : unit_vectors(g.dioid, 3))
      if (vec_leq(x, y)) CHECK(vec_leq(px, project_pi(g, y)));
  }
}

TEST_CASE("alpha1 sends atom sets through the interval abstraction") {
  GaloisLift g = even_interval_lift(2);
  const auto& d = *g.dioid;

  // the set {-2, 2} marks the two outer singleton rows
  CostVector x(g.dioid, 5);
  x.set(0, d.one());
  x.set(4, d.one());
  CostVector ax = apply_alpha1(g, x);
  CHECK(unit_at(g, ax, 0));
  CHECK_FALSE(unit_at(g, ax, 1));
  CHECK(unit_at(g, ax, 2));

  // completing with the projection lands on the interval [-2,2]
  auto elem = decode_vector(g.abstracted, project_pi(g, ax));
  REQUIRE(elem.has_value());
  CHECK(g.abstracted.name(*elem) == "[-2,2]");
}

TEST_CASE("gamma1 concretizes an interval to its atom marks") {
  GaloisLift g = even_interval_lift(2);
  size_t id = *g.abstracted.find("[-2,0]");
  CostVector enc = encoded_vector(g.abstracted, id, g.dioid);
  CostVector back = apply_gamma1(g, enc);
  // atoms -2, -1, 0 belong; 1 and 2 do not
  CHECK(unit_at(g, back, 0));
  CHECK(unit_at(g, back, 1));
  CHECK(unit_at(g, back, 2));
  CHECK_FALSE(unit_at(g, back, 3));
  CHECK_FALSE(unit_at(g, back, 4));
}

TEST_CASE("adjunction holds exhaustively over the 32 x 7 grid") {
  GaloisLift g = even_interval_lift(2);
  for (const CostVector& x : unit_vectors(g.dioid, 5)) {
    CostVector up = project_pi(g, apply_alpha1(g, x));
    for (size_t b = 0; b < g.abstracted.size(); ++b) {
      CostVector enc = encoded_vector(g.abstracted, b, g.dioid);
      CHECK(vec_leq(up, enc) == vec_leq(x, apply_gamma1(g, enc)));
    }
  }
  CHECK(check_residuated_pair(g));
}

TEST_CASE("a corrupted projection is caught") {
  GaloisLift g = even_interval_lift(2);
  const auto& d = *g.dioid;

  // collapses everything to the bottom element: breaks inflation
  PiFn squash = [&](const CostVector& v) {
    return CostVector(g.dioid, v.dim());
  };
  std::string why;
  CHECK_FALSE(check_residuated_pair_with(g, squash, &why));
  CHECK_FALSE(why.empty());

  // escapes the encoded range: flags the stray image
  PiFn stray = [&](const CostVector& v) {
    CostVector out(g.dioid, v.dim());
    out.set(0, d.one());
    out.set(2, d.one());
    (void)v;
    return out;
  };
  CHECK_FALSE(check_residuated_pair_with(g, stray, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("no state-map lift matches the interval abstraction") {
  JoinLinearityReport rep = check_linearizability_counterexample();
  CHECK_FALSE(rep.linear);
  REQUIRE(rep.basis.size() == 7);
  CHECK(rep.lhs_positions == std::vector<size_t>{2, 5});
  CHECK(rep.rhs_positions == std::vector<size_t>{7});
  CHECK(rep.basis[1] == "[-2]");
  CHECK(rep.basis[4] == "[2]");
  CHECK(rep.basis[6] == "[-2,2]");
  CHECK_FALSE(rep.summary.empty());
}

TEST_CASE("lattice files build working lifts") {
  const char* text = R"(elements none warn fatal
cover none warn
cover warn fatal
alpha timeout   -> warn
alpha retry     -> warn
alpha oom       -> fatal
alpha assertion -> fatal
)";
  GaloisLift g = parse_galois_file(text);
  std::vector<std::string> rows = render_alpha1(g);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "e e e e");
  CHECK(rows[1] == ". . e e");
  CHECK(check_residuated_pair(g));

  CHECK_THROWS_AS(parse_galois_file("elements a\ncover a z\n"), ParseError);
  CHECK_THROWS_AS(
      parse_galois_file("elements a b\ncover a b\nalpha x -> a\nalpha x -> b\n"),
      ParseError);
  CHECK_THROWS_AS(parse_galois_file("cover a b\n"), ParseError);
  CHECK_THROWS_AS(parse_galois_file(""), Error);
}

TEST_CASE("wider interval lifts verify too") {
  GaloisLift g = even_interval_lift(4);
  CHECK(g.abstracted.size() == 16);
  CHECK(render_alpha1(g).size() == 5);
  CHECK(check_residuated_pair(g));
}
