#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "orbitkit/coadjoint.hpp"

using namespace orbitkit;
using namespace testutil;

namespace {

Polynomial var(int n, int k) { return Polynomial::variable(n, k - 1); }

VectorQ generic_layer_sample(const OrbitData& orbit, int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    VectorQ lam = zero_vector(n);
    for (int k : orbit.lambda_free) lam[k - 1] = random_rat(rng);
    if (orbit.pfaffian.evaluate(lam) != 0) return lam;
  }
  throw std::runtime_error("no generic sample found");
}

}  // namespace

TEST_CASE("3-dim skew form and jump set") {
  NilpotentAlgebra alg(heisenberg_c());
  CoadjointEngine eng(alg);
  VectorQ lam = {Rational(1), Rational(0), Rational(0)};
  auto b = eng.skew_form_rational(lam);
  CHECK(b.at(1, 2) == Rational(-1));  // lambda([X2, X3]) = lambda(-X1)
  CHECK(b.at(2, 1) == Rational(1));
  CHECK(b.at(0, 1) == Rational(0));
  CHECK(rational_jump_set(b) == std::vector<int>{2, 3});
}

TEST_CASE("orbit data on the example algebras") {
  SUBCASE("3-dim") {
    NilpotentAlgebra alg(heisenberg_c());
    OrbitData o = CoadjointEngine(alg).orbit_data();
    CHECK(o.e == std::vector<int>{2, 3});
    CHECK(o.j == std::vector<int>{3});
    CHECK(o.d == 1);
    CHECK(o.lambda_free == std::vector<int>{1});
    CHECK(o.pfaffian == -var(3, 1));
  }
  SUBCASE("4x4 unipotent") {
    NilpotentAlgebra alg(upper4_c());
    OrbitData o = CoadjointEngine(alg).orbit_data();
    CHECK(o.e == std::vector<int>{2, 3, 4, 6});
    CHECK(o.j == std::vector<int>{4, 6});
    CHECK(o.d == 2);
    CHECK(o.lambda_free == std::vector<int>{1, 5});
    CHECK(o.pfaffian == -(var(6, 1) * var(6, 1)));
  }
  SUBCASE("9-dim") {
    NilpotentAlgebra alg(gl10_c());
    OrbitData o = CoadjointEngine(alg).orbit_data();
    CHECK(o.e == std::vector<int>{4, 5, 6, 7, 8, 9});
    CHECK(o.j == std::vector<int>{7, 8, 9});
    CHECK(o.d == 3);
    CHECK(o.lambda_free == std::vector<int>{1, 2, 3});
    Polynomial l1 = var(9, 1), l2 = var(9, 2), l3 = var(9, 3);
    Polynomial expected = -((l1 - l3) * (l2 - l3) * (l1 + l2 + l3));
    CHECK(o.pfaffian == expected);
    // the three factors divide the Pfaffian exactly
    CHECK(o.pfaffian.try_divide(l1 - l3).has_value());
    CHECK(o.pfaffian.try_divide(l2 - l3).has_value());
    CHECK(o.pfaffian.try_divide(l1 + l2 + l3).has_value());
    CHECK(!o.pfaffian.try_divide(l1 - l2).has_value());
  }
  SUBCASE("free 2-step") {
    NilpotentAlgebra alg(free2step_c());
    OrbitData o = CoadjointEngine(alg).orbit_data();
    CHECK(o.e == std::vector<int>{4, 5});
    CHECK(o.j == std::vector<int>{5});
    CHECK(o.d == 1);
    CHECK(o.lambda_free == std::vector<int>{1, 2, 3, 6});
    CHECK(o.pfaffian == -var(6, 1));
  }
  SUBCASE("5-dim") {
    NilpotentAlgebra alg(fivedim_c());
    OrbitData o = CoadjointEngine(alg).orbit_data();
    CHECK(o.e == std::vector<int>{3, 5});
    CHECK(o.j == std::vector<int>{5});
    CHECK(o.d == 1);
    CHECK(o.lambda_free == std::vector<int>{1, 2, 4});
    CHECK(o.pfaffian == var(5, 1));
  }
  SUBCASE("abelian") {
    NilpotentAlgebra alg(abelian_c(2));
    OrbitData o = CoadjointEngine(alg).orbit_data();
    CHECK(o.e.empty());
    CHECK(o.d == 0);
    CHECK(o.pfaffian == Polynomial(2, Rational(1)));
    CHECK(o.lambda_free == std::vector<int>{1, 2});
  }
}

TEST_CASE("pfaffian squared equals the minor determinant") {
  for (const auto& c : {heisenberg_c(), upper4_c(), gl10_c(), free2step_c(), fivedim_c()}) {
    NilpotentAlgebra alg(c);
    CoadjointEngine eng(alg);
    OrbitData o = eng.orbit_data();
    CHECK(o.pfaffian * o.pfaffian == eng.det_submatrix(o.e));
  }
}

TEST_CASE("pfaffian transforms by the product of jump eigenvalues") {
  struct Row {
    StructureConstants c;
    VectorQ a;
  };
  std::vector<Row> rows = {
      {heisenberg_c(), {rat(2), rat(2), rat(1)}},
      {upper4_c(), {rat(1), rat(2), rat(1, 2), rat(2), rat(1), rat(1, 2)}},
      {free2step_c(), {rat(2), rat(2), rat(1), rat(2), rat(1), rat(1)}},
      {fivedim_c(), {rat(4), rat(4), rat(2), rat(2), rat(2)}},
  };
  for (const auto& row : rows) {
    NilpotentAlgebra alg(row.c);
    CoadjointEngine eng(alg);
    OrbitData o = eng.orbit_data();
    Rational factor(1);
    for (int k : o.e) factor *= row.a[k - 1];
    CHECK(o.pfaffian.scale_variables(row.a) == o.pfaffian * factor);
  }
}

TEST_CASE("radical and polarization on the 3-dim example") {
  NilpotentAlgebra alg(heisenberg_c());
  CoadjointEngine eng(alg);
  Functional lam = Functional::generic(3);
  auto rad = eng.radical(lam);
  REQUIRE(rad.dimension() == 1);
  CHECK(rad.basis().at(0, 0) == RatFunc(3, Rational(1)));
  CHECK(rad.basis().at(0, 1).is_zero());
  CHECK(rad.basis().at(0, 2).is_zero());

  auto pol = eng.vergne_polarization(lam);
  REQUIRE(pol.dimension() == 2);
  // span{X1, X2}
  std::vector<RatFunc> x1 = {RatFunc(3, Rational(1)), RatFunc(3), RatFunc(3)};
  std::vector<RatFunc> x2 = {RatFunc(3), RatFunc(3, Rational(1)), RatFunc(3)};
  std::vector<RatFunc> x3 = {RatFunc(3), RatFunc(3), RatFunc(3, Rational(1))};
  CHECK(pol.contains(x1));
  CHECK(pol.contains(x2));
  CHECK(!pol.contains(x3));
}

TEST_CASE("polarization properties at random generic-layer functionals") {
  std::mt19937_64 rng(31);
  for (const auto& c : {heisenberg_c(), upper4_c(), gl10_c(), free2step_c(), fivedim_c()}) {
    NilpotentAlgebra alg(c);
    CoadjointEngine eng(alg);
    OrbitData o = eng.orbit_data();
    const int n = alg.dim();
    for (int trial = 0; trial < 20; ++trial) {
      VectorQ lam = generic_layer_sample(o, n, rng);
      // the constructor re-verifies subalgebra, isotropy and dimension
      auto pol = eng.vergne_polarization(Functional::rational(lam));
      CHECK(static_cast<int>(pol.dimension()) == n - o.d);
      auto rad = eng.radical(Functional::rational(lam));
      CHECK(static_cast<int>(rad.dimension()) == n - 2 * o.d);
      // radical sits inside every polarization
      CHECK(pol.sum(rad) == pol);
    }
  }
}

TEST_CASE("non-generic functionals are rejected") {
  NilpotentAlgebra alg(heisenberg_c());
  CoadjointEngine eng(alg);
  Functional flat = Functional::rational({Rational(0), Rational(1), Rational(1)});
  CHECK_THROWS_AS(eng.vergne_polarization(flat), NotInGenericLayer);
}

TEST_CASE("polarization is equivariant under the dual dilation action") {
  struct Row {
    StructureConstants c;
    VectorQ a;
  };
  std::vector<Row> rows = {
      {heisenberg_c(), {rat(4), rat(2), rat(2)}},
      {fivedim_c(), {rat(4), rat(4), rat(2), rat(2), rat(2)}},
      {free2step_c(), {rat(2), rat(2), rat(1), rat(2), rat(1), rat(1)}},
  };
  for (const auto& row : rows) {
    NilpotentAlgebra alg(row.c);
    CoadjointEngine eng(alg);
    const int n = alg.dim();
    Functional lam = Functional::generic(n);
    // (A lambda)(X_k) = a_k lambda_k
    auto pol_scaled = eng.vergne_polarization(lam.scaled_entries(row.a));
    auto pol = eng.vergne_polarization(lam);
    // A^{-1} p(lambda): divide coordinate k by a_k
    Matrix<RatFunc> mapped(pol.dimension(), n, RatFunc(n));
    for (std::size_t r = 0; r < pol.dimension(); ++r)
      for (int k = 0; k < n; ++k)
        mapped.at(r, k) = pol.basis().at(r, k) * (Rational(1) / row.a[k]);
    CHECK(RowSpace<RatFunc>(mapped) == pol_scaled);
  }
}

TEST_CASE("jump set sampling confirmation agrees with rational samples") {
  std::mt19937_64 rng(57);
  for (const auto& c : {heisenberg_c(), upper4_c(), gl10_c()}) {
    NilpotentAlgebra alg(c);
    CoadjointEngine eng(alg);
    int d = -1;
    auto e = eng.jump_set(&d);
    OrbitData o = eng.orbit_data();
    CHECK(e == o.e);
    CHECK(d == o.d);
    // rational samples in the generic layer reproduce the symbolic jump set
    for (int trial = 0; trial < 50; ++trial) {
      VectorQ lam = generic_layer_sample(o, alg.dim(), rng);
      CHECK(rational_jump_set(eng.skew_form_rational(lam)) == e);
    }
  }
}
