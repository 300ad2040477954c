#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/dilation.hpp"
#include "orbitkit/tiling.hpp"

namespace orbitkit {

struct BasisNotThroughDerivedAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DecompositionCase {
  NontrivialAction,
  TrivialActionNoncommutative,
  TrivialActionCommutative,
};

enum class Multiplicity { Singleton, CountablyInfinite };

enum class IrreducibilityVerdict { Irreducible, ReducibleLikely, Unknown };

enum class BDResult { Irreducible, NotImpliedIrreducible };

struct DecompositionReport {
  DecompositionCase which_case = DecompositionCase::TrivialActionCommutative;
  std::optional<TilingSpec> tiling;  // present iff case 1
  std::string fiber_descriptor;
  Multiplicity multiplicity = Multiplicity::Singleton;
  IrreducibilityVerdict irreducibility = IrreducibilityVerdict::Unknown;
  std::vector<std::string> evidence;
};

std::string to_string(DecompositionCase c);
std::string to_string(IrreducibilityVerdict v);
std::string to_string(BDResult r);

DecompositionReport classify(const NilpotentAlgebra& alg, const DilationSpec& spec,
                             const OrbitData& orbit);

/// Bekka-Driutti criterion: the radical is not contained in a proper rational
/// ideal iff some element has Q-linearly independent tail coordinates of full
/// count n - m. Decided exactly per functional mode.
BDResult bekka_driutti_check(const NilpotentAlgebra& alg, const Functional& lam,
                             const RowSpace<RatFunc>& radical,
                             std::vector<std::string>* evidence = nullptr);

/// Combines the expansive, density, and Bekka-Driutti rules into a verdict
/// with an evidence trail; mutates `report` in place and returns the verdict.
IrreducibilityVerdict fiber_irreducibility(DecompositionReport& report, const DilationSpec& spec,
                                           const DensityProfile& profile, const OrbitData& orbit,
                                           std::optional<BDResult> bd);

}  // namespace orbitkit
