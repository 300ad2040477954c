#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

/// Exponent vector; length equals the ambient variable count.
using Monomial = std::vector<int>;

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;  // lex within a degree block
  }
};

/// Sparse multivariate polynomial with rational coefficients.
/// All polynomials combined in one expression must share the same nvars.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_[Monomial(nvars, 0)] = c;
  }
  static Polynomial variable(int nvars, int index, const Rational& coeff = Rational(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  int total_degree() const;         // -1 for the zero polynomial
  int degree_in(int var) const;
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Monomial, Rational, GradedLex>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  void set_coefficient(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational evaluate(const VectorQ& point) const;
  double evaluate_double(const std::vector<double>& point) const;

  /// Substitution x_i -> c_i * x_i.
  Polynomial scale_variables(const VectorQ& factors) const;

  /// Exact quotient, or nullopt if `divisor` does not divide this exactly.
  std::optional<Polynomial> try_divide(const Polynomial& divisor) const;

  /// Leading term under graded lex.
  std::pair<Monomial, Rational> leading_term() const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

  /// Deterministic (coefficient, exponent vector) list, graded-lex ascending.
  std::vector<std::pair<Rational, Monomial>> sparse_list() const;

 private:
  int nvars_;
  std::map<Monomial, Rational, GradedLex> terms_;
  void check_compatible(const Polynomial& o) const;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace orbitkit
