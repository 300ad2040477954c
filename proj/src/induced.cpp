#include "orbitkit/induced.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <random>

namespace orbitkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Rational frac_part(const Rational& q) {
  Int num = numerator(q), den = denominator(q);
  Int f = num / den;
  if (num % den != 0 && num < 0) f -= 1;
  return q - Rational(f);
}

Rational dyadic_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-24, 24);
  return Rational(num(rng), 8);
}

TestFunction random_gaussian(int arity, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<double> center(arity), freq(arity);
  for (int i = 0; i < arity; ++i) {
    center[i] = u(rng);
    freq[i] = u(rng);
  }
  return gaussian(arity, center, 1.0, freq);
}

}  // namespace

TestFunction gaussian(int arity, std::vector<double> center, double width,
                      std::vector<double> freq) {
  if (static_cast<int>(center.size()) != arity) throw std::invalid_argument("center size");
  if (freq.empty()) freq.assign(arity, 0.0);
  if (static_cast<int>(freq.size()) != arity) throw std::invalid_argument("freq size");
  TestFunction g;
  g.arity = arity;
  g.f = [arity, center, width, freq](const std::vector<double>& x) {
    double quad = 0.0, phase = 0.0;
    for (int i = 0; i < arity; ++i) {
      double dx = x[i] - center[i];
      quad += dx * dx / (width * width);
      phase += freq[i] * x[i];
    }
    return std::exp(-quad) * std::complex<double>(std::cos(kTwoPi * phase),
                                                  std::sin(kTwoPi * phase));
  };
  return g;
}

InducedRep::InducedRep(const NilpotentAlgebra& alg, const OrbitData& orbit, const VectorQ& lambda)
    : alg_(alg), orbit_(orbit), lam_(lambda) {
  const int n = alg.dim();
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda size");
  CoadjointEngine eng(alg);
  if (rational_jump_set(eng.skew_form_rational(lambda)) != orbit.e)
    throw NotInGenericLayer("lambda has a non-generic jump set");
  if (orbit.pfaffian.evaluate(lambda) == 0)
    throw NotInGenericLayer("Pfaffian vanishes at lambda");

  Functional lf = Functional::rational(lambda);
  RowSpace<RatFunc> p = orbit.d == 0 ? eng.radical(lf) : eng.vergne_polarization(lf);

  // re-echelon from the bottom so each basis row has a distinct trailing index
  Matrix<Rational> rev(p.dimension(), n, Rational(0));
  for (std::size_t r = 0; r < p.dimension(); ++r)
    for (int c = 0; c < n; ++c) rev.at(r, n - 1 - c) = p.basis().at(r, c).constant_value();
  auto pivots = rev.rref();
  if (pivots.size() != p.dimension())
    throw InternalInconsistency("polarization basis lost rank in re-echelon");
  pol_ = Matrix<Rational>(p.dimension(), n, Rational(0));
  trailing_.assign(p.dimension(), 0);
  for (std::size_t r = 0; r < p.dimension(); ++r) {
    std::size_t out = p.dimension() - 1 - r;  // ascending trailing index
    for (int c = 0; c < n; ++c) pol_.at(out, c) = rev.at(r, n - 1 - c);
    trailing_[out] = n - static_cast<int>(pivots[r]);
  }
  std::vector<int> expected;
  for (int k = 1; k <= n; ++k)
    if (std::find(orbit_.j.begin(), orbit_.j.end(), k) == orbit_.j.end()) expected.push_back(k);
  if (trailing_ != expected)
    throw InternalInconsistency("polarization trailing indices do not complement j");
}

VectorQ InducedRep::section_log(const VectorQ& t) const {
  const int n = alg_.dim();
  if (static_cast<int>(t.size()) != orbit_.d) throw std::invalid_argument("t size != d");
  VectorQ r = zero_vector(n);
  for (int a = 0; a < orbit_.d; ++a) {
    VectorQ factor = zero_vector(n);
    factor[orbit_.j[a] - 1] = t[a];
    r = alg_.bch_product(r, factor);
  }
  return r;
}

VectorQ InducedRep::candidate_log(const VectorQ& t_prime, const VectorQ& coeffs) const {
  const int n = alg_.dim();
  VectorQ r = zero_vector(n);
  for (int a = 0; a < orbit_.d; ++a) {
    VectorQ factor = zero_vector(n);
    factor[orbit_.j[a] - 1] = t_prime[a];
    r = alg_.bch_product(r, factor);
  }
  VectorQ p = zero_vector(n);
  for (std::size_t row = 0; row < coeffs.size(); ++row)
    for (int c = 0; c < n; ++c) p[c] += coeffs[row] * pol_.at(row, c);
  return alg_.bch_product(r, p);
}

Factorization InducedRep::factorize(const GroupElement& y, const VectorQ& t) const {
  const int n = alg_.dim();
  VectorQ u = alg_.bch_product(alg_.inverse(y).first_kind, section_log(t));

  VectorQ t_prime(orbit_.d, Rational(0));
  VectorQ coeffs(pol_.rows(), Rational(0));
  // one downward pass: the unknown attached to index k enters coordinate k
  // with coefficient 1 and leaves all higher coordinates untouched
  for (int k = n; k >= 1; --k) {
    VectorQ v = candidate_log(t_prime, coeffs);
    Rational delta = u[k - 1] - v[k - 1];
    if (delta == 0) continue;
    auto jt = std::find(orbit_.j.begin(), orbit_.j.end(), k);
    if (jt != orbit_.j.end()) {
      t_prime[jt - orbit_.j.begin()] += delta;
    } else {
      auto rt = std::find(trailing_.begin(), trailing_.end(), k);
      if (rt == trailing_.end()) throw FactorizationFailed("no unknown at coordinate");
      coeffs[rt - trailing_.begin()] += delta;
    }
  }
  if (candidate_log(t_prime, coeffs) != u)
    throw FactorizationFailed("triangular solve residual is nonzero");

  Factorization fac;
  fac.t_prime = t_prime;
  fac.p = zero_vector(n);
  for (std::size_t row = 0; row < coeffs.size(); ++row)
    for (int c = 0; c < n; ++c) fac.p[c] += coeffs[row] * pol_.at(row, c);
  fac.lambda_p = Rational(0);
  for (int c = 0; c < n; ++c) fac.lambda_p += lam_[c] * fac.p[c];
  return fac;
}

std::complex<double> InducedRep::evaluate_pi(const GroupElement& y, const TestFunction& f,
                                             const VectorQ& t) const {
  if (f.arity != orbit_.d) throw std::invalid_argument("test function arity != d");
  Factorization fac = factorize(y, t);
  double theta = -kTwoPi * to_double(frac_part(fac.lambda_p));
  std::complex<double> phase(std::cos(theta), std::sin(theta));
  std::vector<double> tp(orbit_.d);
  for (int a = 0; a < orbit_.d; ++a) tp[a] = to_double(fac.t_prime[a]);
  return phase * f(tp);
}

TestFunction intertwiner_C(const DilationSpec& spec, const OrbitData& orbit, long long m,
                           TestFunction f) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("intertwiner requires an automorphism");
  const int d = orbit.d;
  if (f.arity != d) throw std::invalid_argument("test function arity != d");
  std::vector<double> scale(d);
  Rational prod(1);
  for (int a = 0; a < d; ++a) {
    scale[a] = to_double(pow_q(spec.a[orbit.j[a] - 1], m));
    prod *= spec.a[orbit.j[a] - 1];
  }
  double amp = std::pow(std::abs(to_double(prod)), 0.5 * static_cast<double>(m));
  TestFunction g;
  g.arity = d;
  g.f = [f, scale, amp, d](const std::vector<double>& t) {
    std::vector<double> s(d);
    for (int a = 0; a < d; ++a) s[a] = scale[a] * t[a];
    return amp * f(s);
  };
  return g;
}

double verify_intertwining(const NilpotentAlgebra& alg, const DilationSpec& spec,
                           const OrbitData& orbit, const VectorQ& lambda, long long m,
                           int samples, std::uint64_t seed) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("intertwining requires an automorphism");
  const int n = alg.dim();
  VectorQ lambda2(n);
  for (int k = 0; k < n; ++k) lambda2[k] = lambda[k] * pow_q(spec.a[k], m);
  InducedRep rep1(alg, orbit, lambda);
  InducedRep rep2(alg, orbit, lambda2);

  Rational prod(1);
  for (int a = 0; a < orbit.d; ++a) prod *= spec.a[orbit.j[a] - 1];
  double amp = std::pow(std::abs(to_double(prod)), 0.5 * static_cast<double>(m));

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    VectorQ x(n);
    for (int k = 0; k < n; ++k) x[k] = dyadic_sample(rng);
    GroupElement y = alg.element_from_first(x);
    VectorQ t(orbit.d);
    for (int a = 0; a < orbit.d; ++a) t[a] = dyadic_sample(rng);
    TestFunction f = random_gaussian(orbit.d, rng);

    VectorQ t_scaled(orbit.d);
    for (int a = 0; a < orbit.d; ++a) t_scaled[a] = t[a] * pow_q(spec.a[orbit.j[a] - 1], m);
    // C(a^m) pi_lambda(y) = pi_{A^m lambda}(a^{-m} y) C(a^m)
    VectorQ x_back(n);
    for (int k = 0; k < n; ++k) x_back[k] = x[k] * pow_q(spec.a[k], -m);
    GroupElement y_back = alg.element_from_first(x_back);
    std::complex<double> lhs = amp * rep1.evaluate_pi(y, f, t_scaled);
    std::complex<double> rhs = rep2.evaluate_pi(y_back, intertwiner_C(spec, orbit, m, f), t);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

WaveletOps::WaveletOps(const NilpotentAlgebra& alg, const DilationSpec& spec)
    : alg_(alg), spec_(spec) {
  if (!spec.is_automorphism) throw NotAnAutomorphism("wavelet operators require an automorphism");
}

VectorQ WaveletOps::alpha_pow(long long m, const VectorQ& x) const {
  VectorQ out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] * pow_q(spec_.a[k], m);
  return out;
}

TestFunction WaveletOps::translate(const VectorQ& x, TestFunction f) const {
  const int n = alg_.dim();
  if (f.arity != n) throw std::invalid_argument("arity != dim");
  std::vector<double> xneg(n);
  for (int k = 0; k < n; ++k) xneg[k] = -to_double(x[k]);
  const NilpotentAlgebra* alg = &alg_;
  TestFunction g;
  g.arity = n;
  g.f = [alg, xneg, f](const std::vector<double>& y) { return f(alg->bch(xneg, y)); };
  return g;
}

TestFunction WaveletOps::dilate(long long m, TestFunction f) const {
  const int n = alg_.dim();
  if (f.arity != n) throw std::invalid_argument("arity != dim");
  std::vector<double> scale(n);
  for (int k = 0; k < n; ++k) scale[k] = to_double(pow_q(spec_.a[k], m));
  double amp = std::pow(to_double(spec_.det_modulus), 0.5 * static_cast<double>(m));
  TestFunction g;
  g.arity = n;
  g.f = [f, scale, amp, n](const std::vector<double>& y) {
    std::vector<double> s(n);
    for (int k = 0; k < n; ++k) s[k] = scale[k] * y[k];
    return amp * f(s);
  };
  return g;
}

TestFunction WaveletOps::V(const VectorQ& x, long long m, TestFunction f) const {
  return translate(x, dilate(m, std::move(f)));
}

std::pair<VectorQ, long long> WaveletOps::semidirect_product(const VectorQ& x1, long long m1,
                                                             const VectorQ& x2,
                                                             long long m2) const {
  return {alg_.bch_product(x1, alpha_pow(-m1, x2)), m1 + m2};
}

double WaveletOps::verify_group_law(int samples, std::uint64_t seed) const {
  const int n = alg_.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mdist(-2, 2);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    VectorQ x1(n), x2(n);
    for (int k = 0; k < n; ++k) {
      x1[k] = dyadic_sample(rng);
      x2[k] = dyadic_sample(rng);
    }
    long long m1 = mdist(rng), m2 = mdist(rng);
    TestFunction f = random_gaussian(n, rng);
    TestFunction lhs = V(x1, m1, V(x2, m2, f));
    auto [z, m] = semidirect_product(x1, m1, x2, m2);
    TestFunction rhs = V(z, m, f);
    std::vector<double> y(n);
    for (int k = 0; k < n; ++k) y[k] = to_double(dyadic_sample(rng));
    worst = std::max(worst, std::abs(lhs(y) - rhs(y)));
  }
  return worst;
}

double WaveletOps::verify_unitarity(const TestFunction& f, double box_half_width) const {
  const int n = f.arity;
  if (n != alg_.dim()) throw std::invalid_argument("arity != dim");
  if (n > 3) throw std::invalid_argument("quadrature check limited to dim <= 3");

  using GL = boost::math::quadrature::gauss<double, 30>;
  std::vector<double> nodes, weights;
  for (std::size_t i = 0; i < GL::abscissa().size(); ++i) {
    nodes.push_back(GL::abscissa()[i]);
    weights.push_back(GL::weights()[i]);
    if (GL::abscissa()[i] != 0.0) {
      nodes.push_back(-GL::abscissa()[i]);
      weights.push_back(GL::weights()[i]);
    }
  }

  TestFunction df = dilate(1, f);
  // per-axis box scaling keeps the quadrature resolution matched to the
  // integrand's feature width after the dilation compresses it
  auto norm2 = [&](const TestFunction& g, const std::vector<double>& half_width) {
    double total = 0.0;
    std::vector<double> pt(n);
    std::function<void(int, double)> walk = [&](int dim, double wprod) {
      if (dim == n) {
        total += wprod * std::norm(g(pt));
        return;
      }
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        pt[dim] = nodes[i] * half_width[dim];
        walk(dim + 1, wprod * weights[i] * half_width[dim]);
      }
    };
    walk(0, 1.0);
    return std::sqrt(total);
  };
  std::vector<double> box(n, box_half_width), box_df(n);
  for (int k = 0; k < n; ++k)
    box_df[k] = box_half_width / std::max(1.0, std::abs(to_double(spec_.a[k])));
  return std::abs(norm2(df, box_df) - norm2(f, box));
}

}  // namespace orbitkit
