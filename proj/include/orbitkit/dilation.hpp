#pragma once

#include <string>
#include <vector>

#include "orbitkit/algebra.hpp"
#include "orbitkit/coadjoint.hpp"
#include "orbitkit/functional.hpp"

namespace orbitkit {

struct ZeroEigenvalue : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnAutomorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotExpansive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Diagonal dilation A X_k = a_k X_k with derived classification flags.
struct DilationSpec {
  VectorQ a;
  bool is_automorphism = false;
  bool is_expansive = false;
  bool acts_trivially_on_lambda = false;
  Rational det_modulus;                      // |prod a_k|
  std::vector<std::string> violations;       // automorphism constraint failures
};

enum class CoordStatus { Dense, Discrete, Unknown };
enum class DensityVerdict { Dense, NotDense, Unknown };

struct DensityProfile {
  std::vector<CoordStatus> coords;
  DensityVerdict overall = DensityVerdict::Unknown;
  std::vector<std::string> evidence;  // which rule fired, per coordinate
};

struct GammaWord {
  std::vector<Int> j;  // integer lattice coordinates
  long long k = 0;     // dilation exponent (word = alpha^k of the lattice point)
  GroupElement element;  // multiplied out
  Rational error;        // first-kind max-norm distance to the target
};

/// Validates eigenvalues against the bracket relations; `orbit` supplies the
/// generic jump set used by the trivial-action flag.
DilationSpec validate_dilation(const NilpotentAlgebra& alg, const OrbitData& orbit,
                               const VectorQ& a);

Rational modular_factor(const DilationSpec& spec, long long m);

Functional dual_action(const DilationSpec& spec, const Functional& lam, long long m);

/// Lemma check: trivial action on Lambda forces |det A| = 1.
bool lemma_detone_check(const DilationSpec& spec);

DensityProfile density_profile(const NilpotentAlgebra& alg, const DilationSpec& spec);

/// Constructive approximation in Gamma_alpha for expansive dilations:
/// a word alpha^k(lattice point) whose first-kind coordinates are within
/// eps of the target (exact verification, max norm).
GammaWord approximate_in_gamma_alpha(const NilpotentAlgebra& alg, const DilationSpec& spec,
                                     const VectorQ& target, const Rational& eps);

}  // namespace orbitkit
