#include "orbitkit/ratfunc.hpp"

#include <stdexcept>

namespace orbitkit {

namespace {

// Divides out the common monomial factor and the rational content of p,
// returning (reduced p, monomial, content).
Polynomial strip_monomial_content(const Polynomial& p, Monomial& mono, Rational& content) {
  mono.assign(p.nvars(), 0);
  content = Rational(0);
  if (p.is_zero()) {
    content = Rational(1);
    return p;
  }
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      mono = m;
      first = false;
    } else {
      for (int i = 0; i < p.nvars(); ++i)
        if (m[i] < mono[i]) mono[i] = m[i];
    }
    Int n = numerator(c) < 0 ? Int(-numerator(c)) : numerator(c);
    Int d = denominator(c);
    if (content == 0)
      content = Rational(n, d);
    else
      content = Rational(gcd(numerator(content) * d, n * denominator(content)),
                         denominator(content) * d);
  }
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) mm[i] = m[i] - mono[i];
    out.set_coefficient(mm, c / content);
  }
  return out;
}

}  // namespace

RatFunc::RatFunc(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.nvars() != den.nvars()) throw std::invalid_argument("RatFunc arity mismatch");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.nvars(), Rational(1));
    return;
  }
  if (den_.is_constant()) {
    num_ = num_ * (Rational(1) / den_.constant_value());
    den_ = Polynomial(num_.nvars(), Rational(1));
    return;
  }
  Monomial mn, md;
  Rational cn, cd;
  Polynomial rn = strip_monomial_content(num_, mn, cn);
  Polynomial rd = strip_monomial_content(den_, md, cd);
  // cancel common monomial part
  Monomial common(num_.nvars());
  for (int i = 0; i < num_.nvars(); ++i) common[i] = std::min(mn[i], md[i]);
  auto apply = [&](const Polynomial& base, const Monomial& mono) {
    Polynomial out(base.nvars());
    for (const auto& [m, c] : base.terms()) {
      Monomial mm(base.nvars());
      for (int i = 0; i < base.nvars(); ++i) mm[i] = m[i] + mono[i] - common[i];
      out.set_coefficient(mm, c);
    }
    return out;
  };
  Polynomial n2 = apply(rn, mn) * cn;
  Polynomial d2 = apply(rd, md) * cd;
  // probe exact divisibility in both directions
  if (auto q = n2.try_divide(d2)) {
    num_ = *q;
    den_ = Polynomial(num_.nvars(), Rational(1));
    return;
  }
  if (auto q = d2.try_divide(n2)) {
    // n/d = 1/(d/n)
    Rational lead = q->leading_term().second;
    num_ = Polynomial(num_.nvars(), Rational(1) / lead);
    den_ = *q * (Rational(1) / lead);
    return;
  }
  // make denominator leading coefficient 1
  Rational lead = d2.leading_term().second;
  num_ = n2 * (Rational(1) / lead);
  den_ = d2 * (Rational(1) / lead);
}

Polynomial RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("RatFunc is not polynomial");
  return num_ * (Rational(1) / den_.constant_value());
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

std::string RatFunc::to_string(const std::vector<std::string>& var_names) const {
  if (is_polynomial()) return as_polynomial().to_string(var_names);
  return "(" + num_.to_string(var_names) + ")/(" + den_.to_string(var_names) + ")";
}

}  // namespace orbitkit
