#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "lpr/errors.hpp"
#include "lpr/matrix.hpp"
#include "lpr/rational.hpp"

namespace lpr::field {

template <class F>
Matrix<typename F::Elem> identity(const F& f, std::size_t n) {
  Matrix<typename F::Elem> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
Matrix<typename F::Elem> mul(const F& f, const Matrix<typename F::Elem>& a,
                             const Matrix<typename F::Elem>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix<typename F::Elem> c(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

template <class F>
Matrix<typename F::Elem> sub(const F& f, const Matrix<typename F::Elem>& a,
                             const Matrix<typename F::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape mismatch");
  Matrix<typename F::Elem> c(a.rows(), a.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
  return c;
}

// Row vector times matrix.
template <class F>
std::vector<typename F::Elem> vec_mat_mul(const F& f, const std::vector<typename F::Elem>& v,
                                          const Matrix<typename F::Elem>& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix shape mismatch");
  std::vector<typename F::Elem> out(m.cols(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (f.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

// In-place row echelon form by ordinary field elimination.  Returns the
// pivot columns in increasing order; row t has its pivot at pivots[t].
template <class F>
std::vector<std::size_t> gauss_echelon(const F& f, Matrix<typename F::Elem>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pr = r;
    while (pr < m.rows() && f.is_zero(m.at(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    const auto pivot_inv = f.inv(m.at(r, col));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, col))) continue;
      const auto factor = f.mul(m.at(i, col), pivot_inv);
      m.at(i, col) = f.zero();
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) row echelon form for rational input.  Rows are
// scaled to integers first; every intermediate entry is a minor of that
// integer matrix, so sizes stay Hadamard-bounded and all divisions are
// exact.  Returns pivot columns; m is replaced by the integer echelon form.
std::vector<std::size_t> bareiss_echelon(Matrix<Rat>& m);

namespace detail {

// Kernel basis of an echelon matrix: one vector per free column, each
// normalized so its first nonzero entry is one.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_from_echelon(
    const F& f, const Matrix<typename F::Elem>& u, const std::vector<std::size_t>& pivots) {
  const std::size_t cols = u.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> x(cols, f.zero());
    x[fc] = f.one();
    for (std::size_t t = pivots.size(); t-- > 0;) {
      const std::size_t pc = pivots[t];
      if (pc > fc) continue;  // columns right of fc are all zero in x
      auto s = f.zero();
      for (std::size_t j = pc + 1; j <= fc; ++j) {
        if (f.is_zero(x[j]) || f.is_zero(u.at(t, j))) continue;
        s = f.add(s, f.mul(u.at(t, j), x[j]));
      }
      x[pc] = f.neg(f.div(s, u.at(t, pc)));
    }
    // normalize: first nonzero entry = 1
    for (std::size_t j = 0; j < cols; ++j) {
      if (f.is_zero(x[j])) continue;
      const auto scale = f.inv(x[j]);
      for (std::size_t k = j; k < cols; ++k) x[k] = f.mul(x[k], scale);
      break;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace detail

// Exact rank over the configured field.
template <class F>
std::size_t rank(const F& f, Matrix<typename F::Elem> m) {
  if constexpr (std::is_same_v<F, RationalField>) {
    (void)f;
    return bareiss_echelon(m).size();
  } else {
    return gauss_echelon(f, m).size();
  }
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<typename F::Elem>> right_kernel_basis(const F& f,
                                                              Matrix<typename F::Elem> m) {
  std::vector<std::size_t> pivots;
  if constexpr (std::is_same_v<F, RationalField>) {
    pivots = bareiss_echelon(m);
  } else {
    pivots = gauss_echelon(f, m);
  }
  return detail::kernel_from_echelon(f, m, pivots);
}

// Basis of {w : w m = 0}; size is rows - rank(m).
template <class F>
std::vector<std::vector<typename F::Elem>> left_kernel_basis(const F& f,
                                                             const Matrix<typename F::Elem>& m) {
  return right_kernel_basis(f, transpose(m));
}

// M = (A B; C D) with A the leading block_size x block_size submatrix.
// Returns M/A = D - C A^{-1} B; throws SingularBlock if A is singular.
template <class F>
Matrix<typename F::Elem> schur_complement(const F& f, const Matrix<typename F::Elem>& m,
                                          std::size_t block_size) {
  if (block_size > m.rows() || block_size > m.cols())
    throw DimensionMismatch("schur block larger than matrix");
  const std::size_t dr = m.rows() - block_size;
  const std::size_t dc = m.cols() - block_size;

  // Solve A X = B by Gauss-Jordan on [A | B].
  Matrix<typename F::Elem> aug(block_size, block_size + dc, f.zero());
  for (std::size_t i = 0; i < block_size; ++i) {
    for (std::size_t j = 0; j < block_size; ++j) aug.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < dc; ++j) aug.at(i, block_size + j) = m.at(i, block_size + j);
  }
  for (std::size_t col = 0; col < block_size; ++col) {
    std::size_t pr = col;
    while (pr < block_size && f.is_zero(aug.at(pr, col))) ++pr;
    if (pr == block_size) throw SingularBlock("leading block is singular");
    aug.swap_rows(col, pr);
    const auto pivot_inv = f.inv(aug.at(col, col));
    for (std::size_t j = col; j < aug.cols(); ++j) aug.at(col, j) = f.mul(aug.at(col, j), pivot_inv);
    for (std::size_t i = 0; i < block_size; ++i) {
      if (i == col || f.is_zero(aug.at(i, col))) continue;
      const auto factor = aug.at(i, col);
      for (std::size_t j = col; j < aug.cols(); ++j)
        aug.at(i, j) = f.sub(aug.at(i, j), f.mul(factor, aug.at(col, j)));
    }
  }

  Matrix<typename F::Elem> out(dr, dc, f.zero());
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dc; ++j) {
      auto acc = m.at(block_size + i, block_size + j);
      for (std::size_t k = 0; k < block_size; ++k)
        acc = f.sub(acc, f.mul(m.at(block_size + i, k), aug.at(k, block_size + j)));
      out.at(i, j) = acc;
    }
  return out;
}

}  // namespace lpr::field
