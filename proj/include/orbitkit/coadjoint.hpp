#pragma once

#include <vector>

#include "orbitkit/algebra.hpp"
#include "orbitkit/functional.hpp"
#include "orbitkit/matrix.hpp"

namespace orbitkit {

struct NotInGenericLayer : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generic coadjoint-orbit data: jump set e, cross-section indices j,
/// half-dimension d, Pfaffian polynomial in l_1..l_n, and the free
/// coordinates parametrizing the cross-section Lambda.
struct OrbitData {
  std::vector<int> e;            // 1-based, sorted
  std::vector<int> j;            // subset of e
  int d = 0;                     // |e| = 2d
  Polynomial pfaffian;           // over n generic symbols; 1 when d = 0
  std::vector<int> lambda_free;  // {1..n} \ e
  std::string omega_descriptor;  // membership condition for the layer
};

/// Orbit-method engine over a fixed algebra.
class CoadjointEngine {
 public:
  explicit CoadjointEngine(const NilpotentAlgebra& alg) : alg_(alg) {}

  const NilpotentAlgebra& algebra() const { return alg_; }

  /// B(lambda)_{ij} = lambda([X_i, X_j]) with entries in the functional's
  /// symbol ring.
  Matrix<Polynomial> skew_form(const Functional& lam) const;
  Matrix<RatFunc> skew_form_field(const Functional& lam) const;
  Matrix<Rational> skew_form_rational(const VectorQ& lam) const;

  /// Jump indices of a given functional (rank increases of the row filtration).
  std::vector<int> jump_set_of(const Functional& lam) const;

  /// Generic jump set with Schwartz-Zippel confirmation at rational samples.
  /// Throws InternalInconsistency if symbolic and sampled ranks disagree.
  std::vector<int> jump_set(int* d_out = nullptr) const;

  /// n_i(lambda) chain; chain()[i-1] is the kernel of the i x i block inside n_i.
  std::vector<RowSpace<RatFunc>> chain(const Functional& lam) const;
  RowSpace<RatFunc> radical(const Functional& lam) const;

  /// Vergne polarization sum_i n_i(lambda); throws NotInGenericLayer when the
  /// jump set of lambda differs from the generic one. Internal postconditions
  /// (subalgebra, isotropy, dimension n-d) are re-verified.
  RowSpace<RatFunc> vergne_polarization(const Functional& lam) const;

  /// Full generic orbit data (jump set, j, Pfaffian, free coordinates).
  OrbitData orbit_data() const;

  /// Pfaffian of the e x e submatrix of B(generic lambda), matching recursion
  /// expanding along the smallest remaining index.
  Polynomial pfaffian(const std::vector<int>& e) const;

  /// Determinant of the e x e submatrix (test oracle for P^2 = det).
  Polynomial det_submatrix(const std::vector<int>& e) const;

 private:
  const NilpotentAlgebra& alg_;
};

/// Exact rational rank helper used by sampling confirmations.
std::vector<int> rational_jump_set(const Matrix<Rational>& b);

}  // namespace orbitkit
