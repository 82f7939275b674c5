#pragma once

#include <cstddef>
#include <vector>

#include "lpr/errors.hpp"

namespace lpr::field {

// Dense row-major matrix over an arbitrary scalar type.  Arithmetic lives
// in linalg.hpp and is parameterised over a field object.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill = E{})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const E& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<E>& data() { return a_; }
  const std::vector<E>& data() const { return a_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> a_;
};

template <class E>
Matrix<E> transpose(const Matrix<E>& m) {
  Matrix<E> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <class E>
Matrix<E> submatrix(const Matrix<E>& m, std::size_t row0, std::size_t col0, std::size_t rows,
                    std::size_t cols) {
  if (row0 + rows > m.rows() || col0 + cols > m.cols())
    throw DimensionMismatch("submatrix out of range");
  Matrix<E> s(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) s.at(i, j) = m.at(row0 + i, col0 + j);
  return s;
}

}  // namespace lpr::field
