#pragma once

#include <cstdint>
#include <string>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/dilation.hpp"

namespace orbitkit {

struct TrivialAction : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroPivotCoordinate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generalized Shannon band E = { lambda in Lambda :
/// min(1,c) <= |lambda_{pivot}| < max(1,c) }, c = |a_pivot|.
struct TilingSpec {
  int pivot = 0;    // 1-based index, outside e
  Rational scale;   // c = |a_pivot|, != 1
  VectorQ a;        // full eigenvalue vector (for the dilation action)
};

struct TilingReport {
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
};

TilingSpec make_shannon_tiling(const DilationSpec& spec, const OrbitData& orbit);

/// Band membership of the pivot magnitude, exact rational comparisons.
bool band_contains(const TilingSpec& t, const Rational& pivot_value);

/// The unique m with A^{-m} lambda in E.
long long tile_index(const TilingSpec& t, const Rational& pivot_value);
long long tile_index(const TilingSpec& t, const Functional& lam);

/// Monte Carlo existence/uniqueness check over random rational lambda in
/// Lambda (dyadic grid in [-8,8], pivot coordinate and Pfaffian nonzero).
TilingReport verify_tiling(const TilingSpec& t, const OrbitData& orbit, std::uint64_t samples,
                           std::uint64_t seed);

}  // namespace orbitkit
