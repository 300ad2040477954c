#pragma once

#include <string>

#include "orbitkit/polynomial.hpp"

namespace orbitkit {

/// Element of the fraction field of Q[x_1..x_k].
///
/// Normalization is best-effort (monomial content, exact-division probes,
/// unit denominator when possible); equality always compares by
/// cross-multiplication, so unreduced representatives are harmless.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(0, Rational(1)) {}
  explicit RatFunc(int nvars) : num_(nvars), den_(nvars, Rational(1)) {}
  RatFunc(int nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
  explicit RatFunc(const Polynomial& p) : num_(p), den_(p.nvars(), Rational(1)) {}
  RatFunc(const Polynomial& num, const Polynomial& den);

  int nvars() const { return num_.nvars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Polynomial as_polynomial() const;  // requires is_polynomial()
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator*(const Rational& c) const { return *this * RatFunc(nvars(), c); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  Polynomial num_, den_;
  void normalize();
};

}  // namespace orbitkit
