#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "orbitkit/algebra.hpp"

using namespace orbitkit;
using namespace testutil;

TEST_CASE("validation accepts the example algebras") {
  struct Row {
    StructureConstants c;
    int cls, derived;
  };
  std::vector<Row> rows = {
      {heisenberg_c(), 2, 1}, {upper4_c(), 3, 3},    {gl10_c(), 2, 3},
      {free2step_c(), 2, 3},  {fivedim_c(), 2, 2},   {abelian_c(2), 1, 0},
  };
  for (const auto& row : rows) {
    auto rep = validate_algebra(row.c);
    CHECK(rep.valid);
    CHECK(rep.jacobi_violations.empty());
    CHECK(rep.triangularity_violations.empty());
    CHECK(rep.nilpotency_class == row.cls);
    CHECK(rep.derived_dim == row.derived);
    CHECK(rep.derived_is_initial_span);
  }
}

TEST_CASE("triangularity violation is reported") {
  StructureConstants c(3);
  c.set(1, 2, 3, Rational(1));  // k >= min(i,j) is not allowed
  auto rep = validate_algebra(c);
  CHECK(!rep.valid);
  CHECK(!rep.triangularity_violations.empty());
  CHECK_THROWS_AS(NilpotentAlgebra{c}, std::invalid_argument);
}

TEST_CASE("jacobi violation is reported") {
  // perturbed 4x4 unipotent constants: [X4,X5] = 2 X2 breaks Jacobi on (4,5,6)
  StructureConstants c(6);
  c.set(4, 5, 2, Rational(2));
  c.set(5, 6, 3, Rational(1));
  c.set(3, 4, 1, Rational(-1));
  c.set(2, 6, 1, Rational(1));
  auto rep = validate_algebra(c);
  CHECK(!rep.valid);
  CHECK(!rep.jacobi_violations.empty());
}

TEST_CASE("bch matches the hand truncation on the 3-dim example") {
  NilpotentAlgebra alg(heisenberg_c());
  // [X2, X3] = -X1: bch(s X3, t X2) = s X3 + t X2 + (st/2) X1
  VectorQ x = {Rational(0), Rational(0), Rational(3)};
  VectorQ y = {Rational(0), Rational(5), Rational(0)};
  VectorQ z = alg.bch_product(x, y);
  CHECK(z[0] == Rational(15, 2));
  CHECK(z[1] == Rational(5));
  CHECK(z[2] == Rational(3));
  // and reversed order flips the correction sign
  VectorQ w = alg.bch_product(y, x);
  CHECK(w[0] == Rational(-15, 2));
}

TEST_CASE("bch group axioms at random points") {
  std::vector<StructureConstants> cs = {heisenberg_c(), upper4_c(), gl10_c(), free2step_c(),
                                        fivedim_c()};
  std::mt19937_64 rng(2026);
  for (const auto& c : cs) {
    NilpotentAlgebra alg(c);
    const int n = alg.dim();
    for (int trial = 0; trial < 100; ++trial) {
      VectorQ x = random_vec(rng, n), y = random_vec(rng, n), z = random_vec(rng, n);
      VectorQ l = alg.bch_product(alg.bch_product(x, y), z);
      VectorQ r = alg.bch_product(x, alg.bch_product(y, z));
      CHECK(l == r);
      CHECK(is_zero(alg.bch_product(x, neg(x))));
      CHECK(alg.bch_product(x, zero_vector(n)) == x);
      CHECK(alg.bch_product(zero_vector(n), x) == x);
    }
  }
}

TEST_CASE("coordinate conversions round-trip") {
  std::vector<StructureConstants> cs = {heisenberg_c(), upper4_c(), gl10_c(), free2step_c()};
  std::mt19937_64 rng(7);
  for (const auto& c : cs) {
    NilpotentAlgebra alg(c);
    const int n = alg.dim();
    for (int trial = 0; trial < 50; ++trial) {
      VectorQ x = random_vec(rng, n);
      CHECK(alg.first_from_second(alg.second_from_first(x)) == x);
      CHECK(alg.second_from_first(alg.first_from_second(x)) == x);
    }
  }
}

TEST_CASE("group elements multiply consistently with bch") {
  NilpotentAlgebra alg(upper4_c());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    VectorQ x = random_vec(rng, 6), y = random_vec(rng, 6);
    GroupElement a = alg.element_from_first(x);
    GroupElement b = alg.element_from_first(y);
    GroupElement ab = alg.multiply(a, b);
    CHECK(ab.first_kind == alg.bch_product(x, y));
    GroupElement inv = alg.inverse(a);
    CHECK(is_zero(alg.multiply(a, inv).first_kind));
    CHECK(inv.first_kind == neg(x));
  }
}

TEST_CASE("second-kind multiplication polynomials agree with the group law") {
  NilpotentAlgebra alg(heisenberg_c());
  auto polys = alg.multiplication_polynomials();
  REQUIRE(polys.size() == 3);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    VectorQ s = random_vec(rng, 3), t = random_vec(rng, 3);
    GroupElement a = alg.element_from_second(s);
    GroupElement b = alg.element_from_second(t);
    VectorQ prod = alg.second_kind(alg.multiply(a, b));
    VectorQ point = s;
    point.insert(point.end(), t.begin(), t.end());
    for (int k = 0; k < 3; ++k) CHECK(polys[k].evaluate(point) == prod[k]);
  }
}

TEST_CASE("lattice closure holds for integer structure constants") {
  for (const auto& c : {heisenberg_c(), upper4_c(), gl10_c(), free2step_c(), fivedim_c()}) {
    NilpotentAlgebra alg(c);
    CHECK(alg.lattice_closure_check());
  }
}

TEST_CASE("lattice closure fails for a fractional bracket") {
  StructureConstants c(3);
  c.set(2, 3, 1, Rational(-1, 3));
  NilpotentAlgebra alg(c);
  CHECK(!alg.lattice_closure_check());
}
