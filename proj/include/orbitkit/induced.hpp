#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/dilation.hpp"

namespace orbitkit {

struct FactorizationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Analytic callable R^k -> C (Gaussian bumps with optional linear phase);
/// operators act by precomposition and phase, so identities are exact up to
/// floating-point evaluation.
struct TestFunction {
  int arity = 0;
  std::function<std::complex<double>(const std::vector<double>&)> f;
  std::complex<double> operator()(const std::vector<double>& x) const { return f(x); }
};

/// exp(-sum (x_i - c_i)^2 / w^2) * e^{2 pi i <b, x>}
TestFunction gaussian(int arity, std::vector<double> center, double width = 1.0,
                      std::vector<double> freq = {});

struct Factorization {
  VectorQ t_prime;    // length d
  VectorQ p;          // first-kind coordinates, in the polarization
  Rational lambda_p;  // lambda(p), exact
};

/// Pointwise model of pi_lambda on L^2(R^d) for a rational lambda in the
/// generic layer, via exact BCH factorization through the Vergne polarization.
class InducedRep {
 public:
  InducedRep(const NilpotentAlgebra& alg, const OrbitData& orbit, const VectorQ& lambda);

  const NilpotentAlgebra& algebra() const { return alg_; }
  const OrbitData& orbit() const { return orbit_; }
  const VectorQ& lambda() const { return lam_; }
  int d() const { return orbit_.d; }

  /// Group element exp(t_1 X_{j_1}) ... exp(t_d X_{j_d}).
  VectorQ section_log(const VectorQ& t) const;

  /// Unique (t', p) with y^{-1} n(t) = n(t') exp(p), p in the polarization;
  /// solved by one downward triangular pass and re-verified exactly.
  Factorization factorize(const GroupElement& y, const VectorQ& t) const;

  /// (pi_lambda(y) f)(t) = e^{-2 pi i lambda(p)} f(t').
  std::complex<double> evaluate_pi(const GroupElement& y, const TestFunction& f,
                                   const VectorQ& t) const;

  /// Bottom-echelon polarization basis (row r has trailing index
  /// trailing()[r], coefficient 1 there).
  const Matrix<Rational>& polarization() const { return pol_; }
  const std::vector<int>& trailing() const { return trailing_; }

 private:
  const NilpotentAlgebra& alg_;
  OrbitData orbit_;
  VectorQ lam_;
  Matrix<Rational> pol_;
  std::vector<int> trailing_;  // 1-based, ascending with rows
  VectorQ candidate_log(const VectorQ& t_prime, const VectorQ& coeffs) const;
};

/// C(alpha^m) f(t) = f(a_{j_1}^m t_1, ..., a_{j_d}^m t_d) |a_{j_1}...a_{j_d}|^{m/2}.
TestFunction intertwiner_C(const DilationSpec& spec, const OrbitData& orbit, long long m,
                           TestFunction f);

/// Max |C(alpha^m) pi_lambda(y) f - pi_{A^m lambda}(y) C(alpha^m) f| over
/// `samples` random (y, t) pairs with Gaussian test functions.
double verify_intertwining(const NilpotentAlgebra& alg, const DilationSpec& spec,
                           const OrbitData& orbit, const VectorQ& lambda, long long m,
                           int samples, std::uint64_t seed);

/// Wavelet operators on functions over N (first-kind coordinates):
/// T_x f(y) = f(x^{-1} y), D f(y) = |det A|^{1/2} f(alpha y), V(x, m) = T_x D^m.
class WaveletOps {
 public:
  WaveletOps(const NilpotentAlgebra& alg, const DilationSpec& spec);

  TestFunction translate(const VectorQ& x, TestFunction f) const;
  TestFunction dilate(long long m, TestFunction f) const;
  TestFunction V(const VectorQ& x, long long m, TestFunction f) const;

  /// alpha^m applied to first-kind coordinates (exact, diagonal).
  VectorQ alpha_pow(long long m, const VectorQ& x) const;

  /// (x1, m1)(x2, m2) = (x1 . alpha^{-m1}(x2), m1 + m2), exact group product.
  std::pair<VectorQ, long long> semidirect_product(const VectorQ& x1, long long m1,
                                                   const VectorQ& x2, long long m2) const;

  /// Max pointwise |V(g1)V(g2)f - V(g1 g2)f| over random samples.
  double verify_group_law(int samples, std::uint64_t seed) const;

  /// | ||D f|| - ||f|| | for a Gaussian f, tensor Gauss-Legendre quadrature
  /// on [-L, L]^n (n <= 3).
  double verify_unitarity(const TestFunction& f, double box_half_width) const;

 private:
  const NilpotentAlgebra& alg_;
  DilationSpec spec_;
};

}  // namespace orbitkit
