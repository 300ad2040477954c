#pragma once

#include <set>
#include <string>
#include <vector>

#include "orbitkit/polynomial.hpp"

namespace orbitkit {

enum class FunctionalMode { Rational, Generic, QStructured };

/// Element of the dual space n*. Entries are degree <= 1 polynomials over a
/// symbol context: none (rational), the n independent symbols l_1..l_n
/// (generic, possibly with rational overrides), or a declared basis of
/// Q-linearly independent symbols 1, th_1..th_r (Q-structured).
class Functional {
 public:
  static Functional rational(VectorQ values);
  static Functional generic(int n);
  /// Generic entries except entry k = 0 for k in `zero_at` (1-based).
  static Functional generic_zero_at(int n, const std::set<int>& zero_at);
  /// rows[i] = (q_0, q_1, .., q_r): entry i = q_0 + sum q_j th_j.
  static Functional q_structured(int n, int symbol_count, const std::vector<VectorQ>& rows,
                                 std::vector<std::string> symbol_names = {});

  int dim() const { return n_; }
  FunctionalMode mode() const { return mode_; }
  int symbol_count() const { return nsyms_; }
  const std::vector<std::string>& symbol_names() const { return names_; }
  const std::vector<Polynomial>& entries() const { return entries_; }
  const Polynomial& entry(int k) const { return entries_[k - 1]; }  // 1-based

  bool is_rational() const { return mode_ == FunctionalMode::Rational; }
  VectorQ rational_values() const;  // requires is_rational()

  /// lambda(p) for a rational coordinate vector p.
  Polynomial pair(const VectorQ& p) const;
  Rational pair_rational(const VectorQ& p) const;  // requires is_rational()

  /// Entry-wise scaling: entry_k *= f_k (used by the dual dilation action).
  Functional scaled_entries(const VectorQ& factors) const;

  /// Functional with entry k replaced by an exact rational value.
  Functional with_entry(int k, const Rational& value) const;

 private:
  int n_ = 0;
  FunctionalMode mode_ = FunctionalMode::Rational;
  int nsyms_ = 0;
  std::vector<std::string> names_;
  std::vector<Polynomial> entries_;
};

}  // namespace orbitkit
