#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "s2det/errors.hpp"

namespace s2det {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <class Field>
std::vector<std::size_t> row_reduce(const Field& field, Matrix<typename Field::value_type>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && field.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const auto scale = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
std::size_t rank(const Field& field, Matrix<typename Field::value_type> m) {
  return row_reduce(field, m).size();
}

// A nonzero vector x with m x = 0, if one exists.
template <class Field>
std::optional<std::vector<typename Field::value_type>> kernel_vector(const Field& field,
                                                                     Matrix<typename Field::value_type> m) {
  const auto pivots = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < m.cols() && is_pivot[free_col]) ++free_col;
  if (free_col == m.cols()) return std::nullopt;
  std::vector<typename Field::value_type> x(m.cols(), field.zero());
  x[free_col] = field.one();
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(m(r, free_col));
  return x;
}

template <class Field>
typename Field::value_type determinant(const Field& field, Matrix<typename Field::value_type> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  auto det = field.one();
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.rows() && field.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) return field.zero();
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    const auto inv = field.inv(m(col, col));
    for (std::size_t r = col + 1; r < m.rows(); ++r) {
      if (field.is_zero(m(r, col))) continue;
      const auto factor = field.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(col, c)));
    }
  }
  return det;
}

}  // namespace s2det
