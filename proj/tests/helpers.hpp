#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "orbitkit/algebra.hpp"

namespace testutil {

using namespace orbitkit;

// [X3, X2] = X1
inline StructureConstants heisenberg_c() {
  StructureConstants c(3);
  c.set(2, 3, 1, Rational(-1));
  return c;
}

// 4x4 upper triangular unipotent group, class 3
inline StructureConstants upper4_c() {
  StructureConstants c(6);
  c.set(4, 5, 2, Rational(1));
  c.set(5, 6, 3, Rational(1));
  c.set(3, 4, 1, Rational(-1));
  c.set(2, 6, 1, Rational(1));
  return c;
}

// 9-dim group with center span{X1,X2,X3}
inline StructureConstants gl10_c() {
  StructureConstants c(9);
  auto set = [&](int x, int y, int z) { c.set(y, x, z, Rational(-1)); };  // [Xx, Xy] = Xz
  set(7, 4, 1);
  set(7, 5, 2);
  set(7, 6, 3);
  set(8, 4, 2);
  set(8, 5, 3);
  set(8, 6, 2);
  set(9, 4, 3);
  set(9, 5, 1);
  set(9, 6, 1);
  return c;
}

// free 2-step on 3 generators X4, X5, X6
inline StructureConstants free2step_c() {
  StructureConstants c(6);
  c.set(4, 5, 1, Rational(-1));
  c.set(4, 6, 2, Rational(-1));
  c.set(5, 6, 3, Rational(-1));
  return c;
}

// [X3, X5] = X1, [X4, X5] = X2
inline StructureConstants fivedim_c() {
  StructureConstants c(5);
  c.set(3, 5, 1, Rational(1));
  c.set(4, 5, 2, Rational(1));
  return c;
}

inline StructureConstants abelian_c(int n) { return StructureConstants(n); }

inline Rational random_rat(std::mt19937_64& rng, int lo = -24, int hi = 24, int den = 8) {
  std::uniform_int_distribution<int> num(lo, hi);
  return Rational(num(rng), den);
}

inline VectorQ random_vec(std::mt19937_64& rng, int n) {
  VectorQ v(n);
  for (auto& x : v) x = random_rat(rng);
  return v;
}

inline std::string data_file(const std::string& name) {
  return std::string(ORBITKIT_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace testutil
