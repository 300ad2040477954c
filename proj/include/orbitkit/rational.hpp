#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using VectorQ = std::vector<Rational>;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^m for integer m (q != 0 when m < 0).
inline Rational pow_q(const Rational& q, long long m) {
  if (m == 0) return Rational(1);
  if (q == 0 && m < 0) throw std::domain_error("pow_q: 0^negative");
  Rational base = m > 0 ? q : Rational(1) / q;
  unsigned long long e = m > 0 ? static_cast<unsigned long long>(m)
                               : static_cast<unsigned long long>(-m);
  Rational out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline VectorQ zero_vector(std::size_t n) { return VectorQ(n, Rational(0)); }

inline VectorQ neg(const VectorQ& v) {
  VectorQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline VectorQ add(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  VectorQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VectorQ scale(const Rational& c, const VectorQ& v) {
  VectorQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline bool is_zero(const VectorQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Rational max_norm(const VectorQ& v) {
  Rational m(0);
  for (const auto& x : v) {
    Rational a = abs_q(x);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace orbitkit
