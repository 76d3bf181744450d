#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropicost/closure.hpp"
#include "tropicost/matrix.hpp"
#include "tropicost/oracle.hpp"

using namespace tropicost;

namespace {

CostMatrix random_matrix(const DioidPtr& d, size_t rows, size_t cols,
                         SplitMix64& rng) {
  CostMatrix m(d, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (rng.next() % 4) m.set(i, j, random_cost(*d, rng));
  return m;
}

CostVector random_vector(const DioidPtr& d, size_t dim, SplitMix64& rng) {
  CostVector v(d, dim);
  for (size_t i = 0; i < dim; ++i)
    if (rng.next() % 4) v.set(i, random_cost(*d, rng));
  return v;
}

}  // namespace

TEST_CASE("matrix semiring laws on random matrices") {
  for (DioidKind kind : {DioidKind::maxplus, DioidKind::minplus,
                         DioidKind::minmax, DioidKind::maxtimes}) {
    DioidPtr d = make_dioid(kind);
    CAPTURE(d->name());
    SplitMix64 rng{5};
    for (int trial = 0; trial < 60; ++trial) {
      CostMatrix a = random_matrix(d, 3, 3, rng);
      CostMatrix b = random_matrix(d, 3, 3, rng);
      CostMatrix c = random_matrix(d, 3, 3, rng);
      CostMatrix id = CostMatrix::identity(d, 3);

      CHECK(mat_add(a, b) == mat_add(b, a));
      CHECK(mat_add(a, a) == a);
      CHECK(mat_mul(a, id) == a);
      CHECK(mat_mul(id, a) == a);
      CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
      CHECK(mat_mul(mat_add(a, b), c) ==
            mat_add(mat_mul(a, c), mat_mul(b, c)));

      CHECK(mat_leq(a, mat_add(a, b)));
      CHECK(transpose(transpose(a)) == a);
      CHECK(mat_power(a, 3) == mat_mul(a, mat_mul(a, a)));
      CHECK(mat_power(a, 1) == a);
      CHECK_THROWS_AS(mat_power(a, 0), Error);  // positive powers only

      // matrix * vector agrees with matrix * single-column matrix
      CostVector v = random_vector(d, 3, rng);
      CostMatrix vm(d, 3, 1);
      for (size_t i = 0; i < 3; ++i) vm.set(i, 0, v.at(i));
      CostMatrix mv = mat_mul(a, vm);
      CostVector got = mat_vec(a, v);
      for (size_t i = 0; i < 3; ++i)
        CHECK(d->equal(got.at(i), mv.at(i, 0)));

      // trace is the join of the diagonal
      CostValue t = trace(a);
      CostValue manual = d->bot();
      for (size_t i = 0; i < 3; ++i) manual = d->oplus(manual, a.at(i, i));
      CHECK(d->equal(t, manual));
    }
  }
}

TEST_CASE("vector join and order helpers") {
  DioidPtr d = make_dioid(DioidKind::maxplus);
  SplitMix64 rng{13};
  for (int trial = 0; trial < 50; ++trial) {
    CostVector a = random_vector(d, 4, rng);
    CostVector b = random_vector(d, 4, rng);
    CostVector j = vec_add(a, b);
    CHECK(vec_leq(a, j));
    CHECK(vec_leq(b, j));
    CHECK(vec_leq(a, a));
  }
}

TEST_CASE("matrix residual is the greatest subsolution") {
  for (DioidKind kind : {DioidKind::maxplus, DioidKind::minplus}) {
    DioidPtr d = make_dioid(kind);
    CAPTURE(d->name());
    SplitMix64 rng{17};
    for (int trial = 0; trial < 40; ++trial) {
      CostMatrix a = random_matrix(d, 3, 3, rng);
      CostVector y = random_vector(d, 3, rng);
      CostVector r = mat_residual(a, y);

      CHECK(vec_leq(mat_vec(a, r), y));  // sound
      for (int probe = 0; probe < 20; ++probe) {
        CostVector x = random_vector(d, 3, rng);
        if (vec_leq(mat_vec(a, x), y)) CHECK(vec_leq(x, r));  // greatest
      }
    }
  }
}

TEST_CASE("closure of known one-state and acyclic matrices") {
  DioidPtr d = make_dioid(DioidKind::maxplus);

  CostMatrix neg(d, 1, 1);
  neg.set(0, 0, d->from_rational(-2));
  CostMatrix neg_plus = kleene_plus(neg);
  CHECK(d->equal(neg_plus.at(0, 0), d->from_rational(-2)));

  CostMatrix pos(d, 1, 1);
  pos.set(0, 0, d->from_rational(3));
  CostMatrix pos_plus = kleene_plus(pos);
  CHECK(d->equal(pos_plus.at(0, 0), d->top()));

  // two-state chain: the only compound walk is the 0 -> 1 edge pair
  CostMatrix chain(d, 2, 2);
  chain.set(0, 1, d->from_rational(5));
  CostMatrix chain_plus = kleene_plus(chain);
  CHECK(d->equal(chain_plus.at(0, 1), d->from_rational(5)));
  CHECK(d->equal(chain_plus.at(0, 0), d->bot()));
  CHECK(d->equal(chain_plus.at(1, 0), d->bot()));
  CHECK(d->equal(chain_plus.at(1, 1), d->bot()));
}

TEST_CASE("dimension mismatches are refused") {
  DioidPtr d = make_dioid(DioidKind::maxplus);
  SplitMix64 rng{3};
  CostMatrix a = random_matrix(d, 2, 3, rng);
  CostMatrix b = random_matrix(d, 2, 3, rng);
  CHECK_THROWS_AS(mat_mul(a, b), Error);
  CHECK_NOTHROW(mat_add(a, b));
  CostMatrix c = random_matrix(d, 3, 2, rng);
  CHECK_THROWS_AS(mat_add(a, c), Error);
  CHECK_NOTHROW(mat_mul(a, c));
  CHECK_THROWS_AS(trace(a), Error);
}
