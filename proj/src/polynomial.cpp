#include "orbitkit/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitkit {

Polynomial Polynomial::variable(int nvars, int index, const Rational& coeff) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Polynomial p(nvars);
  if (coeff != 0) {
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = coeff;
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& m = terms_.rbegin()->first;
  int d = 0;
  for (int e : m) d += e;
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (m[var] > d) d = m[var];
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::set_coefficient(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_[m] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
  return out;
}

Rational Polynomial::evaluate(const VectorQ& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity");
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    out += t;
  }
  return out;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
  double out = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    out += t;
  }
  return out;
}

Polynomial Polynomial::scale_variables(const VectorQ& factors) const {
  if (static_cast<int>(factors.size()) != nvars_) throw std::invalid_argument("factor arity");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational k = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) k *= factors[i];
    if (k != 0) out.terms_[m] = k;
  }
  return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) return std::nullopt;
  Polynomial q(nvars_);
  Polynomial r = *this;
  auto [dm, dc] = divisor.leading_term();
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading_term();
    Monomial qm(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      qm[i] = rm[i] - dm[i];
      if (qm[i] < 0) return std::nullopt;  // not exactly divisible
    }
    Polynomial t(nvars_);
    t.terms_[qm] = rc / dc;
    q += t;
    r -= t * divisor;
  }
  return q;
}

std::vector<std::pair<Rational, Monomial>> Polynomial::sparse_list() const {
  std::vector<std::pair<Rational, Monomial>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(c, m);
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs_q(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (int e : m)
      if (e > 0) has_var = true;
    if (a != 1 || !has_var) os << a.str();
    bool sep = (a != 1 || !has_var);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (sep) os << "*";
      if (static_cast<int>(var_names.size()) > i)
        os << var_names[i];
      else
        os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      sep = true;
    }
  }
  return os.str();
}

}  // namespace orbitkit
