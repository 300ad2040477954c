#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/matrix.hpp"
#include "orbitkit/polynomial.hpp"
#include "orbitkit/rational.hpp"

namespace orbitkit {

template <class R>
R times_rational(const R& x, const Rational& c) {
  if constexpr (std::is_same_v<R, double>) {
    return x * to_double(c);
  } else {
    return x * c;
  }
}

/// Rational structure constants on a strong Malcev basis:
/// [X_i, X_j] = sum_k c_{ij}^k X_k, stored for i < j only.
class StructureConstants {
 public:
  explicit StructureConstants(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  }

  int dim() const { return n_; }

  /// Sets c_{ij}^k (1-based indices, i < j required).
  void set(int i, int j, int k, const Rational& c);
  Rational get(int i, int j, int k) const;  // extended antisymmetrically

  const std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>& entries() const {
    return c_;
  }

  /// [x, y] for coordinate vectors with entries in any commutative ring R
  /// admitting R*Rational (Rational itself, Polynomial, double).
  template <class R>
  std::vector<R> bracket(const std::vector<R>& x, const std::vector<R>& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
      throw std::invalid_argument("dimension mismatch");
    std::vector<R> out(n_, zero_like(x[0]));
    for (const auto& [ij, terms] : c_) {
      auto [i, j] = ij;
      R coef = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
      for (const auto& [k, c] : terms) out[k - 1] = out[k - 1] + times_rational(coef, c);
    }
    return out;
  }

  bool is_abelian() const { return c_.empty(); }

 private:
  int n_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> c_;

  template <class R>
  static R zero_like(const R& sample) {
    if constexpr (std::is_same_v<R, Polynomial>) {
      return Polynomial(sample.nvars());
    } else if constexpr (std::is_same_v<R, RatFunc>) {
      return RatFunc(sample.nvars());
    } else {
      return R(0);
    }
  }
};

struct ValidationReport {
  bool valid = false;
  int nilpotency_class = 0;               // s
  int derived_dim = 0;                    // dim [n, n]
  bool derived_is_initial_span = false;   // [n,n] == span{X_1..X_m}
  std::vector<std::string> triangularity_violations;
  std::vector<std::string> jacobi_violations;
  std::vector<std::string> warnings;
};

ValidationReport validate_algebra(const StructureConstants& c);

/// Group element in exponential coordinates of the first kind,
/// with cached coordinates of the second kind.
class NilpotentAlgebra;
struct GroupElement {
  VectorQ first_kind;
  mutable std::optional<VectorQ> second_kind;
};

/// A validated algebra together with the group-law machinery.
class NilpotentAlgebra {
 public:
  explicit NilpotentAlgebra(StructureConstants c);

  int dim() const { return c_.dim(); }
  const StructureConstants& constants() const { return c_; }
  const ValidationReport& report() const { return report_; }
  int nilpotency_class() const { return report_.nilpotency_class; }
  bool is_abelian() const { return c_.is_abelian(); }
  int derived_dim() const { return report_.derived_dim; }

  VectorQ bracket(const VectorQ& x, const VectorQ& y) const { return c_.bracket(x, y); }

  /// log(exp x . exp y) via the Dynkin series truncated at the nilpotency class.
  template <class R>
  std::vector<R> bch(const std::vector<R>& x, const std::vector<R>& y) const;

  VectorQ bch_product(const VectorQ& x, const VectorQ& y) const { return bch(x, y); }

  /// exp(sum x_i X_i) = exp(t_1 X_1) ... exp(t_n X_n) conversions.
  template <class R>
  std::vector<R> second_from_first(const std::vector<R>& x) const;
  template <class R>
  std::vector<R> first_from_second(const std::vector<R>& t) const;

  GroupElement element_from_first(VectorQ x) const;
  GroupElement element_from_second(const VectorQ& t) const;
  const VectorQ& second_kind(const GroupElement& g) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;

  /// True iff the second-kind multiplication polynomials are integer-valued
  /// on integer inputs, so Gamma = exp Z X_1 ... exp Z X_n is closed.
  bool lattice_closure_check() const;

  /// The 2n-variable multiplication polynomials (variables s_1..s_n, t_1..t_n).
  std::vector<Polynomial> multiplication_polynomials() const;

 private:
  StructureConstants c_;
  ValidationReport report_;
  // memoized Dynkin term list: (rational coefficient, word over {0=x,1=y})
  mutable std::vector<std::pair<Rational, std::vector<int>>> dynkin_terms_;
  void build_dynkin_terms() const;
};

// --- template implementations -------------------------------------------

template <class R>
std::vector<R> NilpotentAlgebra::bch(const std::vector<R>& x, const std::vector<R>& y) const {
  if (dynkin_terms_.empty()) build_dynkin_terms();
  std::vector<R> out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + y[i];
  for (const auto& [coef, word] : dynkin_terms_) {
    // right-nested bracket of the word
    std::vector<R> b = word.back() == 0 ? x : y;
    for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
      b = c_.bracket(word[i] == 0 ? x : y, b);
    bool zero = true;
    for (const auto& e : b) {
      if constexpr (std::is_same_v<R, Polynomial>) {
        if (!e.is_zero()) zero = false;
      } else {
        if (!(e == R(0))) zero = false;
      }
      if (!zero) break;
    }
    if (zero) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + times_rational(b[i], coef);
  }
  return out;
}

template <class R>
std::vector<R> NilpotentAlgebra::second_from_first(const std::vector<R>& x) const {
  const int n = dim();
  const R zero = x[0] - x[0];
  std::vector<R> t(n, zero);
  std::vector<R> r = x;
  // peel factors from the right; triangularity keeps coordinates > i intact
  for (int i = n; i >= 1; --i) {
    t[i - 1] = r[i - 1];
    std::vector<R> factor(n, zero);
    factor[i - 1] = zero - t[i - 1];
    r = bch(r, factor);
  }
  return t;
}

template <class R>
std::vector<R> NilpotentAlgebra::first_from_second(const std::vector<R>& t) const {
  const int n = dim();
  const R zero = t[0] - t[0];
  std::vector<R> r(n, zero);
  for (int i = 1; i <= n; ++i) {
    std::vector<R> factor(n, zero);
    factor[i - 1] = t[i - 1];
    r = bch(r, factor);
  }
  return r;
}

}  // namespace orbitkit
