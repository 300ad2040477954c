#include "orbitkit/algebra.hpp"

#include <functional>
#include <sstream>

namespace orbitkit {

void StructureConstants::set(int i, int j, int k, const Rational& c) {
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_)
    throw std::out_of_range("structure constant index");
  if (i >= j) throw std::invalid_argument("structure constants stored for i < j only");
  auto& terms = c_[{i, j}];
  for (auto& [kk, cc] : terms) {
    if (kk == k) {
      cc = c;
      return;
    }
  }
  if (c != 0) terms.emplace_back(k, c);
}

Rational StructureConstants::get(int i, int j, int k) const {
  if (i == j) return Rational(0);
  Rational sign(1);
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = c_.find({i, j});
  if (it == c_.end()) return Rational(0);
  for (const auto& [kk, cc] : it->second)
    if (kk == k) return sign * cc;
  return Rational(0);
}

ValidationReport validate_algebra(const StructureConstants& c) {
  const int n = c.dim();
  ValidationReport rep;

  for (const auto& [ij, terms] : c.entries()) {
    auto [i, j] = ij;
    for (const auto& [k, coef] : terms) {
      if (coef == 0) continue;
      if (k >= std::min(i, j)) {
        std::ostringstream os;
        os << "c(" << i << "," << j << ")^" << k << " = " << to_string(coef)
           << " violates k < min(i,j)";
        rep.triangularity_violations.push_back(os.str());
      }
    }
  }

  // Jacobi on all basis triples
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        VectorQ xi = zero_vector(n), xj = zero_vector(n), xk = zero_vector(n);
        xi[i - 1] = 1;
        xj[j - 1] = 1;
        xk[k - 1] = 1;
        VectorQ s = add(add(c.bracket(c.bracket(xi, xj), xk), c.bracket(c.bracket(xj, xk), xi)),
                        c.bracket(c.bracket(xk, xi), xj));
        if (!is_zero(s)) {
          std::ostringstream os;
          os << "Jacobi fails on (" << i << "," << j << "," << k << ")";
          rep.jacobi_violations.push_back(os.str());
        }
      }
    }
  }

  rep.valid = rep.triangularity_violations.empty() && rep.jacobi_violations.empty();

  // derived subalgebra span
  {
    std::vector<VectorQ> gens;
    for (const auto& [ij, terms] : c.entries()) {
      VectorQ v = zero_vector(n);
      bool nz = false;
      for (const auto& [k, coef] : terms) {
        v[k - 1] = coef;
        if (coef != 0) nz = true;
      }
      if (nz) gens.push_back(v);
    }
    Matrix<Rational> m(gens.size(), n);
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (int j = 0; j < n; ++j) m.at(r, j) = gens[r][j];
    RowSpace<Rational> derived(m);
    rep.derived_dim = static_cast<int>(derived.dimension());
    // check span{X_1..X_m}
    rep.derived_is_initial_span = true;
    for (std::size_t r = 0; r < derived.dimension(); ++r)
      for (int j = rep.derived_dim; j < n; ++j)
        if (derived.basis().at(r, j) != 0) rep.derived_is_initial_span = false;
    if (!rep.derived_is_initial_span)
      rep.warnings.push_back("derived subalgebra is not span{X_1..X_m}");
  }

  // nilpotency class via lower central series (only meaningful when valid)
  if (rep.valid) {
    std::vector<VectorQ> layer;
    for (int i = 1; i <= n; ++i) {
      VectorQ v = zero_vector(n);
      v[i - 1] = 1;
      layer.push_back(v);
    }
    int s = 1;
    while (true) {
      std::vector<VectorQ> next;
      for (int i = 1; i <= n; ++i) {
        VectorQ xi = zero_vector(n);
        xi[i - 1] = 1;
        for (const auto& v : layer) {
          VectorQ b = c.bracket(xi, v);
          if (!is_zero(b)) next.push_back(b);
        }
      }
      if (next.empty()) break;
      Matrix<Rational> m(next.size(), n);
      for (std::size_t r = 0; r < next.size(); ++r)
        for (int j = 0; j < n; ++j) m.at(r, j) = next[r][j];
      RowSpace<Rational> sp(m);
      if (sp.dimension() == 0) break;
      std::vector<VectorQ> reduced;
      for (std::size_t r = 0; r < sp.dimension(); ++r) {
        VectorQ v(n);
        for (int j = 0; j < n; ++j) v[j] = sp.basis().at(r, j);
        reduced.push_back(v);
      }
      layer = reduced;
      ++s;
      if (s > n + 1) break;  // cannot happen for a valid triangular algebra
    }
    rep.nilpotency_class = s;
  }

  return rep;
}

NilpotentAlgebra::NilpotentAlgebra(StructureConstants c) : c_(std::move(c)) {
  report_ = validate_algebra(c_);
  if (!report_.valid) throw std::invalid_argument("structure constants are not a valid strong Malcev algebra");
  if (report_.nilpotency_class > 8)
    throw std::invalid_argument("nilpotency class above the supported BCH truncation");
}

void NilpotentAlgebra::build_dynkin_terms() const {
  const int s = report_.nilpotency_class;
  std::vector<std::pair<Rational, std::vector<int>>> terms;
  // Dynkin series: sum over block sequences (r_1,s_1)..(r_b,s_b), r_i+s_i >= 1,
  // coefficient (-1)^(b-1) / b / w / prod(r_i! s_i!), w = total weight.
  auto factorial = [](int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::vector<std::pair<int, int>> blocks;
  std::function<void(int)> rec = [&](int weight) {
    if (!blocks.empty()) {
      int b = static_cast<int>(blocks.size());
      Rational denom = Rational(b) * weight;
      std::vector<int> word;
      for (auto [r, sc] : blocks) {
        denom *= factorial(r) * factorial(sc);
        word.insert(word.end(), r, 0);
        word.insert(word.end(), sc, 1);
      }
      if (word.size() >= 2) {  // degree-1 terms are the explicit x + y
        // words whose last two letters coincide give a vanishing bracket
        if (word[word.size() - 1] != word[word.size() - 2]) {
          Rational coef = Rational((b % 2 == 1) ? 1 : -1) / denom;
          terms.emplace_back(coef, word);
        }
      }
    }
    if (weight >= s) return;
    for (int r = 0; r <= s - weight; ++r) {
      for (int sc = 0; sc + r <= s - weight; ++sc) {
        if (r + sc == 0) continue;
        blocks.emplace_back(r, sc);
        rec(weight + r + sc);
        blocks.pop_back();
      }
    }
  };
  rec(0);
  dynkin_terms_ = std::move(terms);
}

GroupElement NilpotentAlgebra::element_from_first(VectorQ x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("dimension mismatch");
  return GroupElement{std::move(x), std::nullopt};
}

GroupElement NilpotentAlgebra::element_from_second(const VectorQ& t) const {
  GroupElement g{first_from_second(t), t};
  return g;
}

const VectorQ& NilpotentAlgebra::second_kind(const GroupElement& g) const {
  if (!g.second_kind) g.second_kind = second_from_first(g.first_kind);
  return *g.second_kind;
}

GroupElement NilpotentAlgebra::multiply(const GroupElement& a, const GroupElement& b) const {
  return element_from_first(bch_product(a.first_kind, b.first_kind));
}

GroupElement NilpotentAlgebra::inverse(const GroupElement& g) const {
  return element_from_first(neg(g.first_kind));
}

std::vector<Polynomial> NilpotentAlgebra::multiplication_polynomials() const {
  const int n = dim();
  const int nv = 2 * n;
  std::vector<Polynomial> sv(n), tv(n);
  for (int i = 0; i < n; ++i) {
    sv[i] = Polynomial::variable(nv, i);
    tv[i] = Polynomial::variable(nv, n + i);
  }
  auto x = first_from_second(sv);
  auto y = first_from_second(tv);
  auto z = bch(x, y);
  return second_from_first(z);
}

namespace {

// Integer-valuedness of p on Z^m via binomial-basis (finite difference)
// coefficients, using only the variables that actually occur in p.
bool integer_valued(const Polynomial& p) {
  if (p.is_zero()) return true;
  const int nv = p.nvars();
  std::vector<int> support;
  for (int i = 0; i < nv; ++i)
    if (p.degree_in(i) > 0) support.push_back(i);
  const int deg = p.total_degree();
  if (support.empty()) return is_integer(p.constant_value());

  std::map<std::vector<int>, Rational> values;  // point (on support) -> p(point)
  auto value_at = [&](const std::vector<int>& pt) -> const Rational& {
    auto it = values.find(pt);
    if (it != values.end()) return it->second;
    VectorQ full(nv, Rational(0));
    for (std::size_t i = 0; i < support.size(); ++i) full[support[i]] = pt[i];
    return values.emplace(pt, p.evaluate(full)).first->second;
  };

  auto binom = [](int a, int b) {
    Rational r(1);
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };

  // enumerate alpha on the degree simplex
  std::vector<int> alpha(support.size(), 0);
  std::function<bool(std::size_t, int)> walk = [&](std::size_t pos, int remaining) -> bool {
    if (pos == alpha.size()) {
      // finite difference Delta^alpha p (0)
      Rational acc(0);
      std::vector<int> beta(alpha.size(), 0);
      std::function<void(std::size_t, int, Rational)> inner = [&](std::size_t q, int parity,
                                                                  Rational weight) {
        if (q == beta.size()) {
          acc += Rational(parity) * weight * value_at(beta);
          return;
        }
        for (int b = 0; b <= alpha[q]; ++b) {
          beta[q] = b;
          int par = ((alpha[q] - b) % 2 == 0) ? parity : -parity;
          inner(q + 1, par, weight * binom(alpha[q], b));
        }
        beta[q] = 0;
      };
      inner(0, 1, Rational(1));
      return is_integer(acc);
    }
    for (int a = 0; a <= remaining; ++a) {
      alpha[pos] = a;
      if (!walk(pos + 1, remaining - a)) return false;
    }
    alpha[pos] = 0;
    return true;
  };
  return walk(0, deg);
}

}  // namespace

bool NilpotentAlgebra::lattice_closure_check() const {
  for (const auto& p : multiplication_polynomials())
    if (!integer_valued(p)) return false;
  return true;
}

}  // namespace orbitkit
