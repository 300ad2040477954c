#include "orbitkit/tiling.hpp"

#include <algorithm>
#include <random>

namespace orbitkit {

TilingSpec make_shannon_tiling(const DilationSpec& spec, const OrbitData& orbit) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("tiling requires an automorphism");
  if (spec.acts_trivially_on_lambda)
    throw TrivialAction("no dilation tiling: H acts trivially on Lambda");
  for (int k : orbit.lambda_free) {
    if (abs_q(spec.a[k - 1]) != 1) {
      TilingSpec t;
      t.pivot = k;
      t.scale = abs_q(spec.a[k - 1]);
      t.a = spec.a;
      return t;
    }
  }
  throw TrivialAction("no eligible pivot coordinate");
}

bool band_contains(const TilingSpec& t, const Rational& pivot_value) {
  Rational v = abs_q(pivot_value);
  Rational lo = std::min(Rational(1), t.scale);
  Rational hi = std::max(Rational(1), t.scale);
  return lo <= v && v < hi;
}

long long tile_index(const TilingSpec& t, const Rational& pivot_value) {
  if (pivot_value == 0) throw ZeroPivotCoordinate("pivot coordinate is zero");
  Rational c = abs_q(t.a[t.pivot - 1]);  // |a^{-m} lambda| = c^{-m} |lambda|
  long long m = 0;
  Rational v = abs_q(pivot_value);
  // walk m until c^{-m} v lands in the band; magnitude bounds terminate the loop
  while (!band_contains(t, v * pow_q(c, -m))) {
    if (v * pow_q(c, -m) >= std::max(Rational(1), t.scale))
      m += (c > 1 ? 1 : -1);
    else
      m -= (c > 1 ? 1 : -1);
    if (m > 100000 || m < -100000) throw std::runtime_error("tile_index walk did not terminate");
  }
  return m;
}

long long tile_index(const TilingSpec& t, const Functional& lam) {
  if (!lam.is_rational()) throw std::invalid_argument("tile_index requires a rational functional");
  return tile_index(t, lam.rational_values()[t.pivot - 1]);
}

TilingReport verify_tiling(const TilingSpec& t, const OrbitData& orbit, std::uint64_t samples,
                           std::uint64_t seed) {
  TilingReport rep;
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-128, 128);  // dyadic grid [-8,8], step 1/16
  const int n = static_cast<int>(t.a.size());

  for (std::uint64_t s = 0; s < samples; ++s) {
    VectorQ lam(n, Rational(0));
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
      for (int k : orbit.lambda_free) lam[k - 1] = Rational(num(rng), 16);
      ok = lam[t.pivot - 1] != 0 && orbit.pfaffian.evaluate(lam) != 0;
    }
    if (!ok) {
      ++rep.failures;
      continue;
    }
    long long m;
    try {
      m = tile_index(t, lam[t.pivot - 1]);
    } catch (const std::exception&) {
      ++rep.failures;
      continue;
    }
    Rational c = abs_q(t.a[t.pivot - 1]);
    Rational v = abs_q(lam[t.pivot - 1]);
    bool unique = band_contains(t, v * pow_q(c, -m)) &&
                  !band_contains(t, v * pow_q(c, -(m - 1))) &&
                  !band_contains(t, v * pow_q(c, -(m + 1)));
    if (!unique) ++rep.failures;
  }
  return rep;
}

}  // namespace orbitkit
