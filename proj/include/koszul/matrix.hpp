#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

/// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("Matrix: entry count does not match shape");
    }
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Elem>& entries() const { return data_; }

  void append_row(std::span<const Elem> values) {
    if (values.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_.equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b);

/// v · m for a row vector v.
template <class F>
Vec<F> row_times(const F& field, std::span<const typename F::Elem> v, const Matrix<F>& m);

template <class F>
Vec<F> zero_vector(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <class F>
bool is_zero_vector(const F& field, std::span<const typename F::Elem> v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

/// Determinant by elimination (square matrices only).
template <class F>
typename F::Elem determinant(const Matrix<F>& m);

}  // namespace koszul
