#include "orbitkit/dilation.hpp"

#include <algorithm>
#include <sstream>

namespace orbitkit {

DilationSpec validate_dilation(const NilpotentAlgebra& alg, const OrbitData& orbit,
                               const VectorQ& a) {
  const int n = alg.dim();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("eigenvalue count != dimension");
  for (const auto& v : a)
    if (v == 0) throw ZeroEigenvalue("dilation eigenvalue is zero");

  DilationSpec spec;
  spec.a = a;
  spec.is_automorphism = true;
  for (const auto& [ij, terms] : alg.constants().entries()) {
    auto [i, j] = ij;
    for (const auto& [k, c] : terms) {
      if (c == 0) continue;
      if (a[i - 1] * a[j - 1] != a[k - 1]) {
        spec.is_automorphism = false;
        std::ostringstream os;
        os << "a" << i << "*a" << j << " != a" << k << " on c(" << i << "," << j << ")^" << k;
        spec.violations.push_back(os.str());
      }
    }
  }
  spec.is_expansive = true;
  for (const auto& v : a)
    if (abs_q(v) <= 1) spec.is_expansive = false;
  spec.acts_trivially_on_lambda = true;
  for (int k : orbit.lambda_free)
    if (a[k - 1] != 1) spec.acts_trivially_on_lambda = false;
  Rational det(1);
  for (const auto& v : a) det *= v;
  spec.det_modulus = abs_q(det);
  return spec;
}

Rational modular_factor(const DilationSpec& spec, long long m) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("modular_factor requires an automorphism");
  return pow_q(spec.det_modulus, -m);
}

Functional dual_action(const DilationSpec& spec, const Functional& lam, long long m) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("dual_action requires an automorphism");
  VectorQ factors;
  for (const auto& v : spec.a) factors.push_back(pow_q(v, m));
  return lam.scaled_entries(factors);
}

bool lemma_detone_check(const DilationSpec& spec) {
  if (!spec.is_automorphism || !spec.acts_trivially_on_lambda)
    throw PreconditionViolated("lemma_detone_check requires trivial action on Lambda");
  return spec.det_modulus == 1;
}

DensityProfile density_profile(const NilpotentAlgebra& alg, const DilationSpec& spec) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("density_profile requires an automorphism");
  const int n = alg.dim();
  DensityProfile prof;
  prof.coords.assign(n, CoordStatus::Unknown);
  prof.evidence.assign(n, "");

  if (spec.is_expansive) {
    for (int k = 0; k < n; ++k) {
      prof.coords[k] = CoordStatus::Dense;
      prof.evidence[k] = "expansive";
    }
    prof.overall = DensityVerdict::Dense;
    return prof;
  }

  for (int k = 0; k < n; ++k) {
    if (abs_q(spec.a[k]) != 1) {
      prof.coords[k] = CoordStatus::Dense;
      prof.evidence[k] = "scale |a| != 1";
    }
  }
  // bracket saturation to fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [ij, terms] : alg.constants().entries()) {
      auto [i, j] = ij;
      bool scales = !(abs_q(spec.a[i - 1]) == 1 && abs_q(spec.a[j - 1]) == 1);
      if (!scales) continue;
      for (const auto& [k, c] : terms) {
        if (c == 0) continue;
        if (prof.coords[k - 1] != CoordStatus::Dense) {
          prof.coords[k - 1] = CoordStatus::Dense;
          std::ostringstream os;
          os << "saturation via c(" << i << "," << j << ")^" << k;
          prof.evidence[k - 1] = os.str();
          changed = true;
        }
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    if (prof.coords[k] == CoordStatus::Unknown) {
      prof.coords[k] = CoordStatus::Discrete;
      prof.evidence[k] = "|a| = 1, no saturation rule";
    }
  }
  bool all_dense = true, some_discrete = false;
  for (auto s : prof.coords) {
    if (s != CoordStatus::Dense) all_dense = false;
    if (s == CoordStatus::Discrete) some_discrete = true;
  }
  prof.overall = all_dense ? DensityVerdict::Dense
                           : (some_discrete ? DensityVerdict::NotDense : DensityVerdict::Unknown);
  return prof;
}

GammaWord approximate_in_gamma_alpha(const NilpotentAlgebra& alg, const DilationSpec& spec,
                                     const VectorQ& target, const Rational& eps) {
  if (!spec.is_expansive) throw NotExpansive("approximation requires an expansive dilation");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const int n = alg.dim();
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("dimension mismatch");

  VectorQ t_star = alg.second_from_first(target);

  // exact hit when the target's second-kind coordinates are integral
  bool integral = true;
  for (const auto& v : t_star)
    if (!is_integer(v)) integral = false;

  for (long long m = 0; m <= 256; ++m) {
    GammaWord w;
    w.k = -m;
    w.j.resize(n);
    VectorQ second(n);
    for (int i = 0; i < n; ++i) {
      Rational scaled = t_star[i] * pow_q(spec.a[i], m);
      // round to nearest integer
      Int num = numerator(scaled), den = denominator(scaled);
      Int q = num / den, r = num % den;
      if (r < 0) {
        q -= 1;
        r += den;
      }
      if (2 * r >= den) q += 1;
      w.j[i] = q;
      second[i] = Rational(q) * pow_q(spec.a[i], -m);
    }
    w.element = alg.element_from_second(second);
    VectorQ diff = add(w.element.first_kind, neg(target));
    w.error = max_norm(diff);
    if (w.error < eps || (integral && m == 0 && w.error == 0)) return w;
  }
  throw std::runtime_error("approximation did not converge within the exponent cap");
}

}  // namespace orbitkit
