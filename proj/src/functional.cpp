#include "orbitkit/functional.hpp"

#include <stdexcept>

namespace orbitkit {

Functional Functional::rational(VectorQ values) {
  Functional f;
  f.n_ = static_cast<int>(values.size());
  f.mode_ = FunctionalMode::Rational;
  f.nsyms_ = 0;
  for (const auto& v : values) f.entries_.push_back(Polynomial(0, v));
  return f;
}

Functional Functional::generic(int n) { return generic_zero_at(n, {}); }

Functional Functional::generic_zero_at(int n, const std::set<int>& zero_at) {
  Functional f;
  f.n_ = n;
  f.mode_ = FunctionalMode::Generic;
  f.nsyms_ = n;
  for (int k = 1; k <= n; ++k) {
    f.names_.push_back("l" + std::to_string(k));
    f.entries_.push_back(zero_at.count(k) ? Polynomial(n) : Polynomial::variable(n, k - 1));
  }
  return f;
}

Functional Functional::q_structured(int n, int symbol_count, const std::vector<VectorQ>& rows,
                                    std::vector<std::string> symbol_names) {
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count != dimension");
  Functional f;
  f.n_ = n;
  f.mode_ = FunctionalMode::QStructured;
  f.nsyms_ = symbol_count;
  if (symbol_names.empty())
    for (int i = 1; i <= symbol_count; ++i) symbol_names.push_back("th" + std::to_string(i));
  if (static_cast<int>(symbol_names.size()) != symbol_count)
    throw std::invalid_argument("symbol name count mismatch");
  f.names_ = std::move(symbol_names);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != symbol_count + 1)
      throw std::invalid_argument("Q-structured row must have 1 + symbol_count coefficients");
    Polynomial p(symbol_count, row[0]);
    for (int j = 0; j < symbol_count; ++j)
      p += Polynomial::variable(symbol_count, j, row[j + 1]);
    f.entries_.push_back(p);
  }
  return f;
}

VectorQ Functional::rational_values() const {
  if (!is_rational()) throw std::logic_error("functional is not rational");
  VectorQ out;
  for (const auto& e : entries_) out.push_back(e.constant_value());
  return out;
}

Polynomial Functional::pair(const VectorQ& p) const {
  if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("dimension mismatch");
  Polynomial out(nsyms_);
  for (int i = 0; i < n_; ++i) out += entries_[i] * p[i];
  return out;
}

Rational Functional::pair_rational(const VectorQ& p) const {
  return pair(p).is_zero() ? Rational(0) : pair(p).constant_value();
}

Functional Functional::scaled_entries(const VectorQ& factors) const {
  if (static_cast<int>(factors.size()) != n_) throw std::invalid_argument("dimension mismatch");
  Functional out = *this;
  for (int i = 0; i < n_; ++i) out.entries_[i] = entries_[i] * factors[i];
  return out;
}

Functional Functional::with_entry(int k, const Rational& value) const {
  Functional out = *this;
  out.entries_[k - 1] = Polynomial(nsyms_, value);
  return out;
}

}  // namespace orbitkit
