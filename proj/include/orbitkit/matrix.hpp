#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orbitkit/ratfunc.hpp"

namespace orbitkit {

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const RatFunc& x) { return x.is_zero(); }

/// Dense matrix over an exact field (Rational or RatFunc).
/// Construct with a zero prototype so RatFunc arities propagate.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& zero = F())
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }

  F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Matrix top_rows(std::size_t k) const {
    Matrix out(k, cols_, zero_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
  }

  /// Reduced row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_is_zero(at(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      F inv = at(r, c);
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) / inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_is_zero(at(i, c))) continue;
        F f = at(i, c);
        for (std::size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
  }

  /// Basis of the right kernel, one vector per row of the result.
  Matrix kernel() const {
    Matrix tmp = *this;
    auto pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_count = cols_ - pivots.size();
    Matrix out(free_count, cols_, zero_);
    F one = unit();
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      out.at(k, c) = one;
      for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        out.at(k, pivots[pr]) = zero_ - tmp.at(pr, c);
      ++k;
    }
    return out;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!(data_[i] == o.data_[i])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  F zero_;
  std::vector<F> data_;

  F unit() const {
    if constexpr (std::is_same_v<F, Rational>) {
      return Rational(1);
    } else {
      return F(zero_.nvars(), Rational(1));
    }
  }
};

/// Row span represented by a reduced echelon basis.
template <class F>
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(Matrix<F> generators) : basis_(std::move(generators)) {
    auto pivots = basis_.rref();
    Matrix<F> reduced(pivots.size(), basis_.cols(), basis_.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < basis_.cols(); ++j) reduced.at(i, j) = basis_.at(i, j);
    basis_ = reduced;
    pivots_ = pivots;
  }

  std::size_t dimension() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<F>& v) const {
    std::vector<F> r = v;
    reduce(r);
    for (const auto& x : r)
      if (!field_is_zero(x)) return false;
    return true;
  }

  /// Subtracts the projection onto the span; leaves the residual in v.
  void reduce(std::vector<F>& v) const {
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      F f = v[pivots_[i]];
      if (field_is_zero(f)) continue;
      for (std::size_t j = 0; j < basis_.cols(); ++j) v[j] = v[j] - f * basis_.at(i, j);
    }
  }

  RowSpace sum(const RowSpace& o) const {
    Matrix<F> stacked(dimension() + o.dimension(), ambient(), basis_.zero());
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < ambient(); ++j) stacked.at(i, j) = basis_.at(i, j);
    for (std::size_t i = 0; i < o.dimension(); ++i)
      for (std::size_t j = 0; j < ambient(); ++j)
        stacked.at(dimension() + i, j) = o.basis_.at(i, j);
    return RowSpace(stacked);
  }

  bool operator==(const RowSpace& o) const { return basis_ == o.basis_; }

 private:
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orbitkit
