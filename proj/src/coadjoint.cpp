#include "orbitkit/coadjoint.hpp"

#include <map>
#include <random>

namespace orbitkit {

Matrix<Polynomial> CoadjointEngine::skew_form(const Functional& lam) const {
  const int n = alg_.dim();
  if (lam.dim() != n) throw std::invalid_argument("functional dimension mismatch");
  Matrix<Polynomial> b(n, n, Polynomial(lam.symbol_count()));
  for (const auto& [ij, terms] : alg_.constants().entries()) {
    auto [i, j] = ij;
    Polynomial v(lam.symbol_count());
    for (const auto& [k, c] : terms) v += lam.entry(k) * c;
    b.at(i - 1, j - 1) = v;
    b.at(j - 1, i - 1) = -v;
  }
  return b;
}

Matrix<RatFunc> CoadjointEngine::skew_form_field(const Functional& lam) const {
  Matrix<Polynomial> b = skew_form(lam);
  Matrix<RatFunc> out(b.rows(), b.cols(), RatFunc(lam.symbol_count()));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = RatFunc(b.at(i, j));
  return out;
}

Matrix<Rational> CoadjointEngine::skew_form_rational(const VectorQ& lam) const {
  const int n = alg_.dim();
  Matrix<Rational> b(n, n);
  for (const auto& [ij, terms] : alg_.constants().entries()) {
    auto [i, j] = ij;
    Rational v(0);
    for (const auto& [k, c] : terms) v += lam[k - 1] * c;
    b.at(i - 1, j - 1) = v;
    b.at(j - 1, i - 1) = -v;
  }
  return b;
}

std::vector<int> rational_jump_set(const Matrix<Rational>& b) {
  std::vector<int> e;
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= b.rows(); ++k) {
    std::size_t r = b.top_rows(k).rank();
    if (r > prev) e.push_back(static_cast<int>(k));
    prev = r;
  }
  return e;
}

std::vector<int> CoadjointEngine::jump_set_of(const Functional& lam) const {
  if (lam.is_rational()) return rational_jump_set(skew_form_rational(lam.rational_values()));
  Matrix<RatFunc> b = skew_form_field(lam);
  std::vector<int> e;
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= b.rows(); ++k) {
    std::size_t r = b.top_rows(k).rank();
    if (r > prev) e.push_back(static_cast<int>(k));
    prev = r;
  }
  return e;
}

std::vector<int> CoadjointEngine::jump_set(int* d_out) const {
  const int n = alg_.dim();
  std::vector<int> e = jump_set_of(Functional::generic(n));
  // Schwartz-Zippel confirmation: the symbolic jump set must dominate the
  // sampled one, and at least one sample must reproduce it exactly.
  std::mt19937_64 rng(0x0fb1f5ULL);
  std::uniform_int_distribution<int> num(-64, 64);
  bool reproduced = false;
  for (int trial = 0; trial < 8; ++trial) {
    VectorQ lam(n);
    for (int i = 0; i < n; ++i) lam[i] = Rational(num(rng), 8);
    std::vector<int> es = rational_jump_set(skew_form_rational(lam));
    if (es.size() > e.size())
      throw InternalInconsistency("sampled rank exceeds symbolic rank in jump_set");
    if (es == e) reproduced = true;
  }
  if (!e.empty() && !reproduced)
    throw InternalInconsistency("no rational sample reproduced the symbolic jump set");
  if (e.size() % 2 != 0) throw InternalInconsistency("jump set has odd cardinality");
  if (d_out) *d_out = static_cast<int>(e.size() / 2);
  return e;
}

std::vector<RowSpace<RatFunc>> CoadjointEngine::chain(const Functional& lam) const {
  const int n = alg_.dim();
  Matrix<RatFunc> b = skew_form_field(lam);
  const RatFunc zero(lam.symbol_count());
  std::vector<RowSpace<RatFunc>> out;
  for (int i = 1; i <= n; ++i) {
    Matrix<RatFunc> block = b.block(0, 0, i, i);
    Matrix<RatFunc> ker = block.kernel();  // vectors in R^i
    Matrix<RatFunc> emb(ker.rows(), n, zero);
    for (std::size_t r = 0; r < ker.rows(); ++r)
      for (int j = 0; j < i; ++j) emb.at(r, j) = ker.at(r, j);
    out.emplace_back(emb);
  }
  return out;
}

RowSpace<RatFunc> CoadjointEngine::radical(const Functional& lam) const {
  return chain(lam).back();
}

RowSpace<RatFunc> CoadjointEngine::vergne_polarization(const Functional& lam) const {
  const int n = alg_.dim();
  int d = 0;
  std::vector<int> e = jump_set(&d);
  if (jump_set_of(lam) != e)
    throw NotInGenericLayer("functional is outside the generic layer");

  auto ni = chain(lam);
  RowSpace<RatFunc> p = ni[0];
  for (int i = 1; i < n; ++i) p = p.sum(ni[i]);

  // postconditions
  if (p.dimension() != static_cast<std::size_t>(n - d))
    throw InternalInconsistency("polarization dimension != n - d");
  const RatFunc zero(lam.symbol_count());
  for (std::size_t a = 0; a < p.dimension(); ++a) {
    for (std::size_t bidx = a + 1; bidx < p.dimension(); ++bidx) {
      std::vector<RatFunc> u(n, zero), v(n, zero);
      for (int k = 0; k < n; ++k) {
        u[k] = p.basis().at(a, k);
        v[k] = p.basis().at(bidx, k);
      }
      std::vector<RatFunc> br = alg_.constants().bracket(u, v);
      if (!p.contains(br)) throw InternalInconsistency("polarization is not a subalgebra");
      RatFunc pairing = zero;
      for (int k = 1; k <= n; ++k) pairing += RatFunc(lam.entry(k)) * br[k - 1];
      if (!pairing.is_zero()) throw InternalInconsistency("polarization is not isotropic");
    }
  }
  return p;
}

OrbitData CoadjointEngine::orbit_data() const {
  const int n = alg_.dim();
  OrbitData od;
  od.e = jump_set(&od.d);

  Functional gen = Functional::generic(n);
  RowSpace<RatFunc> p = od.d == 0 ? radical(gen) : vergne_polarization(gen);

  // j = { k in e : X_k not in p + n_{k-1} }
  const RatFunc zero(n);
  const RatFunc one(n, Rational(1));
  for (int k : od.e) {
    Matrix<RatFunc> gens(p.dimension() + k - 1, n, zero);
    for (std::size_t r = 0; r < p.dimension(); ++r)
      for (int c = 0; c < n; ++c) gens.at(r, c) = p.basis().at(r, c);
    for (int r = 0; r < k - 1; ++r) gens.at(p.dimension() + r, r) = one;
    RowSpace<RatFunc> span(gens);
    std::vector<RatFunc> xk(n, zero);
    xk[k - 1] = one;
    if (!span.contains(xk)) od.j.push_back(k);
  }
  if (static_cast<int>(od.j.size()) != od.d)
    throw InternalInconsistency("|j| != d in cross-section computation");

  for (int k = 1; k <= n; ++k)
    if (std::find(od.e.begin(), od.e.end(), k) == od.e.end()) od.lambda_free.push_back(k);

  od.pfaffian = od.d == 0 ? Polynomial(n, Rational(1)) : pfaffian(od.e);
  if (od.pfaffian.is_zero()) throw InternalInconsistency("Pfaffian vanishes identically");
  od.omega_descriptor = "jump set equals e and P(lambda) != 0";
  return od;
}

namespace {

Polynomial pfaffian_rec(const Matrix<Polynomial>& b, std::vector<int> idx,
                        std::map<std::vector<int>, Polynomial>& memo, int nsyms) {
  if (idx.empty()) return Polynomial(nsyms, Rational(1));
  auto it = memo.find(idx);
  if (it != memo.end()) return it->second;
  Polynomial out(nsyms);
  int i0 = idx.front();
  for (std::size_t t = 1; t < idx.size(); ++t) {
    // expansion along the smallest index; sign alternates with position
    std::vector<int> rest;
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != t) rest.push_back(idx[q]);
    Polynomial term = b.at(i0, idx[t]) * pfaffian_rec(b, rest, memo, nsyms);
    out = (t % 2 == 1) ? out + term : out - term;
  }
  memo.emplace(std::move(idx), out);
  return out;
}

Polynomial det_rec(const Matrix<Polynomial>& b, const std::vector<int>& rows,
                   std::vector<int> cols, int nsyms) {
  if (cols.empty()) return Polynomial(nsyms, Rational(1));
  int r = rows[rows.size() - cols.size()];
  Polynomial out(nsyms);
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (b.at(r, cols[t]).is_zero()) continue;
    std::vector<int> rest;
    for (std::size_t q = 0; q < cols.size(); ++q)
      if (q != t) rest.push_back(cols[q]);
    Polynomial term = b.at(r, cols[t]) * det_rec(b, rows, rest, nsyms);
    out = (t % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace

Polynomial CoadjointEngine::pfaffian(const std::vector<int>& e) const {
  const int n = alg_.dim();
  Matrix<Polynomial> b = skew_form(Functional::generic(n));
  std::vector<int> idx;
  for (int k : e) idx.push_back(k - 1);
  std::map<std::vector<int>, Polynomial> memo;
  return pfaffian_rec(b, idx, memo, n);
}

Polynomial CoadjointEngine::det_submatrix(const std::vector<int>& e) const {
  const int n = alg_.dim();
  Matrix<Polynomial> b = skew_form(Functional::generic(n));
  std::vector<int> idx;
  for (int k : e) idx.push_back(k - 1);
  return det_rec(b, idx, idx, n);
}

}  // namespace orbitkit
