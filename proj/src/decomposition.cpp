#include "orbitkit/decomposition.hpp"

#include <map>
#include <sstream>

namespace orbitkit {

std::string to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::NontrivialAction: return "NontrivialAction";
    case DecompositionCase::TrivialActionNoncommutative: return "TrivialActionNoncommutative";
    case DecompositionCase::TrivialActionCommutative: return "TrivialActionCommutative";
  }
  return "?";
}

std::string to_string(IrreducibilityVerdict v) {
  switch (v) {
    case IrreducibilityVerdict::Irreducible: return "Irreducible";
    case IrreducibilityVerdict::ReducibleLikely: return "ReducibleLikely";
    case IrreducibilityVerdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(BDResult r) {
  return r == BDResult::Irreducible ? "Irreducible" : "NotImpliedIrreducible";
}

DecompositionReport classify(const NilpotentAlgebra& alg, const DilationSpec& spec,
                             const OrbitData& orbit) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("classify requires an automorphism");
  DecompositionReport rep;
  rep.multiplicity = orbit.d >= 1 ? Multiplicity::CountablyInfinite : Multiplicity::Singleton;

  if (!spec.acts_trivially_on_lambda) {
    rep.which_case = DecompositionCase::NontrivialAction;
    rep.tiling = make_shannon_tiling(spec, orbit);
    rep.fiber_descriptor = "∫_E ⊕_{κ∈I} Ind_{Γ_α}^{Γ_α⋊H}(π_λ|_{Γ_α}) dλ";
    return rep;
  }
  if (!alg.is_abelian()) {
    rep.which_case = DecompositionCase::TrivialActionNoncommutative;
    if (!lemma_detone_check(spec))
      throw InternalInconsistency("trivial action on Lambda but |det A| != 1");
    rep.evidence.push_back("|det A| = 1 confirmed for the trivial-action case");
    rep.fiber_descriptor = "∫_Λ∫_𝕋 ⊕_{κ∈J} π̃_{λ,σ}|_G dσ dλ";
    return rep;
  }
  rep.which_case = DecompositionCase::TrivialActionCommutative;
  rep.fiber_descriptor = "∫_Λ π̃_λ|_{Γ⋊H} dλ";
  return rep;
}

BDResult bekka_driutti_check(const NilpotentAlgebra& alg, const Functional& lam,
                             const RowSpace<RatFunc>& radical,
                             std::vector<std::string>* evidence) {
  if (!alg.report().derived_is_initial_span)
    throw BasisNotThroughDerivedAlgebra("basis does not pass through the derived subalgebra");
  const int n = alg.dim();
  const int m = alg.derived_dim();
  const int tails = n - m;

  // Clear denominators row by row, then read each radical generator's tail as
  // a Q-matrix with one row per monomial in the symbol ring. A full-rank tail
  // block certifies a radical element with n-m Q-independent coordinates.
  std::vector<VectorQ> rows;
  bool dropped = false;
  for (std::size_t r = 0; r < radical.dimension(); ++r) {
    Polynomial common(0, Rational(1));
    bool first = true;
    std::vector<Polynomial> cleared(tails);
    // common denominator = product of the tail denominators, applied crosswise
    for (int j = 0; j < tails; ++j) {
      const RatFunc& f = radical.basis().at(r, m + j);
      if (first) {
        common = f.den();
        first = false;
      } else {
        common = common * f.den();
      }
    }
    for (int j = 0; j < tails; ++j) {
      const RatFunc& f = radical.basis().at(r, m + j);
      auto q = common.try_divide(f.den());
      cleared[j] = f.num() * (*q);
    }
    // strip the common monomial content of the row; it is nonzero wherever
    // the radical element is defined, so it cannot affect the Q-relations
    Monomial content;
    for (int j = 0; j < tails; ++j)
      for (const auto& [c, mono] : cleared[j].sparse_list()) {
        if (content.empty()) {
          content = mono;
        } else {
          for (std::size_t v = 0; v < content.size(); ++v)
            content[v] = std::min(content[v], mono[v]);
        }
      }
    bool nontrivial = false;
    for (int e : content)
      if (e > 0) nontrivial = true;
    if (nontrivial) {
      Polynomial mono_poly(static_cast<int>(content.size()));
      mono_poly.set_coefficient(content, Rational(1));
      for (int j = 0; j < tails; ++j) {
        if (cleared[j].is_zero()) continue;
        cleared[j] = *cleared[j].try_divide(mono_poly);
      }
    }
    std::map<Monomial, VectorQ> by_monomial;
    for (int j = 0; j < tails; ++j) {
      for (const auto& [c, mono] : cleared[j].sparse_list()) {
        auto it = by_monomial.find(mono);
        if (it == by_monomial.end())
          it = by_monomial.emplace(mono, VectorQ(tails, Rational(0))).first;
        it->second[j] += c;
      }
    }
    for (auto& [mono, row] : by_monomial) {
      int deg = 0;
      for (int e : mono) deg += e;
      if (lam.mode() == FunctionalMode::QStructured && deg >= 2) {
        // products of the declared symbols are not known Q-independent of
        // the symbols themselves; skip these rows (conservative)
        dropped = true;
        continue;
      }
      rows.push_back(row);
    }
  }

  std::size_t rank = 0;
  if (!rows.empty()) {
    Matrix<Rational> mat(rows.size(), tails, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < tails; ++j) mat.at(i, j) = rows[i][j];
    rank = mat.rank();
  }

  if (evidence) {
    std::ostringstream os;
    os << "radical tail relations: Q-rank " << rank << " of required " << tails;
    if (dropped) os << " (degree >= 2 symbol products ignored)";
    evidence->push_back(os.str());
  }
  return rank == static_cast<std::size_t>(tails) ? BDResult::Irreducible
                                                 : BDResult::NotImpliedIrreducible;
}

IrreducibilityVerdict fiber_irreducibility(DecompositionReport& report, const DilationSpec& spec,
                                           const DensityProfile& profile, const OrbitData& orbit,
                                           std::optional<BDResult> bd) {
  auto& ev = report.evidence;
  IrreducibilityVerdict verdict = IrreducibilityVerdict::Unknown;

  if (spec.is_expansive) {
    ev.push_back("expansive dilation: all lattice orbits dense");
    verdict = IrreducibilityVerdict::Irreducible;
  } else {
    ev.push_back("expansive rule: not applicable");
  }
  if (profile.overall == DensityVerdict::Dense) {
    ev.push_back("density profile: every coordinate dense");
    verdict = IrreducibilityVerdict::Irreducible;
  } else {
    ev.push_back("density profile: not conclusive for density");
  }
  if (bd) {
    if (*bd == BDResult::Irreducible) {
      ev.push_back("rational-ideal criterion: radical not contained in a proper rational ideal");
      verdict = IrreducibilityVerdict::Irreducible;
    } else {
      ev.push_back("rational-ideal criterion: not implied irreducible");
    }
  }
  if (verdict != IrreducibilityVerdict::Irreducible) {
    bool j_discrete = false;
    for (int k : orbit.j)
      if (profile.coords[k - 1] == CoordStatus::Discrete) j_discrete = true;
    if (j_discrete) {
      ev.push_back(
          "heuristic: a cross-section coordinate is discrete; matches the known reducible "
          "pattern");
      verdict = IrreducibilityVerdict::ReducibleLikely;
    }
  }
  report.irreducibility = verdict;
  return verdict;
}

}  // namespace orbitkit
