#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "orbitkit/coadjoint.hpp"
#include "orbitkit/dilation.hpp"

using namespace orbitkit;
using namespace testutil;

namespace {

struct Fixture {
  NilpotentAlgebra alg;
  OrbitData orbit;
  explicit Fixture(StructureConstants c) : alg(std::move(c)), orbit(CoadjointEngine(alg).orbit_data()) {}
};

}  // namespace

TEST_CASE("classification flags on the 3-dim example") {
  Fixture fx(heisenberg_c());

  auto s1 = validate_dilation(fx.alg, fx.orbit, {rat(2), rat(2), rat(1)});
  CHECK(s1.is_automorphism);
  CHECK(!s1.is_expansive);
  CHECK(!s1.acts_trivially_on_lambda);
  CHECK(s1.det_modulus == rat(4));

  auto s2 = validate_dilation(fx.alg, fx.orbit, {rat(1), rat(1, 2), rat(2)});
  CHECK(s2.is_automorphism);
  CHECK(!s2.is_expansive);
  CHECK(s2.acts_trivially_on_lambda);  // lambda_free = {1}, a1 = 1
  CHECK(s2.det_modulus == rat(1));
  CHECK(lemma_detone_check(s2));

  auto s3 = validate_dilation(fx.alg, fx.orbit, {rat(4), rat(2), rat(2)});
  CHECK(s3.is_automorphism);
  CHECK(s3.is_expansive);
  CHECK(!s3.acts_trivially_on_lambda);
  CHECK(s3.det_modulus == rat(16));

  // a1 must equal a2 * a3
  auto bad = validate_dilation(fx.alg, fx.orbit, {rat(2), rat(2), rat(2)});
  CHECK(!bad.is_automorphism);
  CHECK(!bad.violations.empty());

  CHECK_THROWS_AS(validate_dilation(fx.alg, fx.orbit, {rat(0), rat(1), rat(1)}), ZeroEigenvalue);
  CHECK_THROWS_AS(modular_factor(bad, 1), NotAnAutomorphism);
  CHECK_THROWS_AS(lemma_detone_check(s1), PreconditionViolated);
}

TEST_CASE("classification flags on the larger examples") {
  {
    Fixture fx(upper4_c());
    auto s = validate_dilation(fx.alg, fx.orbit, {rat(1), rat(2), rat(1, 2), rat(2), rat(1), rat(1, 2)});
    CHECK(s.is_automorphism);
    CHECK(!s.is_expansive);
    CHECK(s.acts_trivially_on_lambda);  // lambda_free = {1, 5}
    CHECK(s.det_modulus == rat(1));
    CHECK(lemma_detone_check(s));
  }
  {
    Fixture fx(gl10_c());
    VectorQ a = {rat(4), rat(4), rat(4), rat(2), rat(2), rat(2), rat(2), rat(2), rat(2)};
    auto s = validate_dilation(fx.alg, fx.orbit, a);
    CHECK(s.is_automorphism);
    CHECK(s.is_expansive);
    CHECK(!s.acts_trivially_on_lambda);
  }
  {
    Fixture fx(free2step_c());
    auto s = validate_dilation(fx.alg, fx.orbit, {rat(2), rat(2), rat(1), rat(2), rat(1), rat(1)});
    CHECK(s.is_automorphism);
    CHECK(!s.is_expansive);
    CHECK(!s.acts_trivially_on_lambda);  // a1 = 2 scales a free coordinate
  }
}

TEST_CASE("automorphism flag matches the bch intertwining property") {
  std::mt19937_64 rng(101);
  struct Row {
    StructureConstants c;
    VectorQ a;
    bool expect;
  };
  std::vector<Row> rows = {
      {heisenberg_c(), {rat(4), rat(2), rat(2)}, true},
      {heisenberg_c(), {rat(2), rat(2), rat(2)}, false},
      {fivedim_c(), {rat(4), rat(4), rat(2), rat(2), rat(2)}, true},
      {free2step_c(), {rat(2), rat(2), rat(1), rat(2), rat(1), rat(1)}, true},
  };
  for (const auto& row : rows) {
    NilpotentAlgebra alg(row.c);
    OrbitData orbit = CoadjointEngine(alg).orbit_data();
    auto spec = validate_dilation(alg, orbit, row.a);
    CHECK(spec.is_automorphism == row.expect);
    const int n = alg.dim();
    bool intertwines = true;
    for (int trial = 0; trial < 50 && intertwines; ++trial) {
      VectorQ x = random_vec(rng, n), y = random_vec(rng, n);
      auto map = [&](const VectorQ& v) {
        VectorQ out(n);
        for (int k = 0; k < n; ++k) out[k] = row.a[k] * v[k];
        return out;
      };
      if (map(alg.bch_product(x, y)) != alg.bch_product(map(x), map(y))) intertwines = false;
    }
    CHECK(intertwines == row.expect);
  }
}

TEST_CASE("modular factor and dual action compose") {
  Fixture fx(heisenberg_c());
  auto spec = validate_dilation(fx.alg, fx.orbit, {rat(4), rat(2), rat(2)});
  CHECK(modular_factor(spec, 0) == rat(1));
  CHECK(modular_factor(spec, 1) == rat(1, 16));
  CHECK(modular_factor(spec, -2) == rat(256));

  Functional lam = Functional::rational({rat(3), rat(1, 2), rat(-5)});
  auto once = dual_action(spec, lam, 1);
  CHECK(once.rational_values() == VectorQ{rat(12), rat(1), rat(-10)});
  CHECK(dual_action(spec, dual_action(spec, lam, 2), -1).rational_values() ==
        dual_action(spec, lam, 1).rational_values());
}

TEST_CASE("density profile distinguishes the three 3-dim dilations") {
  Fixture fx(heisenberg_c());
  {
    auto p = density_profile(fx.alg, validate_dilation(fx.alg, fx.orbit, {rat(2), rat(2), rat(1)}));
    CHECK(p.coords[0] == CoordStatus::Dense);
    CHECK(p.coords[1] == CoordStatus::Dense);
    CHECK(p.coords[2] == CoordStatus::Discrete);
    CHECK(p.overall == DensityVerdict::NotDense);
  }
  {
    // a = (1, 1/2, 2): coordinate 1 becomes dense by bracket saturation
    auto p = density_profile(fx.alg, validate_dilation(fx.alg, fx.orbit, {rat(1), rat(1, 2), rat(2)}));
    CHECK(p.coords[0] == CoordStatus::Dense);
    CHECK(p.overall == DensityVerdict::Dense);
  }
  {
    auto p = density_profile(fx.alg, validate_dilation(fx.alg, fx.orbit, {rat(4), rat(2), rat(2)}));
    CHECK(p.overall == DensityVerdict::Dense);
    for (auto s : p.coords) CHECK(s == CoordStatus::Dense);
  }
}

TEST_CASE("lattice approximation for an expansive dilation") {
  Fixture fx(heisenberg_c());
  auto spec = validate_dilation(fx.alg, fx.orbit, {rat(4), rat(2), rat(2)});

  SUBCASE("integral targets are hit exactly") {
    VectorQ zero = zero_vector(3);
    auto w = approximate_in_gamma_alpha(fx.alg, spec, zero, rat(1, 100));
    CHECK(w.error == 0);
    // any point with integral second-kind coordinates is a lattice point
    VectorQ target = fx.alg.first_from_second(VectorQ{rat(2), rat(3), rat(-2)});
    auto w2 = approximate_in_gamma_alpha(fx.alg, spec, target, rat(1, 100));
    CHECK(w2.error == 0);
  }
  SUBCASE("fractional targets within tolerance, verified exactly") {
    VectorQ target = {rat(1, 3), rat(1, 3), rat(1, 3)};
    auto w = approximate_in_gamma_alpha(fx.alg, spec, target, rat(1, 100));
    CHECK(w.error < rat(1, 100));
    // re-verify independently from the word data
    VectorQ second(3);
    for (int i = 0; i < 3; ++i) second[i] = Rational(w.j[i]) * pow_q(spec.a[i], w.k);
    VectorQ diff = add(fx.alg.first_from_second(second), neg(target));
    CHECK(max_norm(diff) == w.error);
  }
  SUBCASE("random targets at two tolerances") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
      VectorQ target = random_vec(rng, 3);
      for (const Rational& eps : {rat(1, 10), rat(1, 100)}) {
        auto w = approximate_in_gamma_alpha(fx.alg, spec, target, eps);
        CHECK(w.error < eps);
      }
    }
  }
  SUBCASE("non-expansive dilations are rejected") {
    auto flat = validate_dilation(fx.alg, fx.orbit, {rat(2), rat(2), rat(1)});
    CHECK_THROWS_AS(approximate_in_gamma_alpha(fx.alg, flat, zero_vector(3), rat(1, 10)),
                    NotExpansive);
  }
}
