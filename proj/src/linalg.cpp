#include "lpr/linalg.hpp"

namespace lpr::field {

std::vector<std::size_t> bareiss_echelon(Matrix<Rat>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Scale each row to integer entries; row scaling preserves the row
  // echelon pivot structure and the right kernel.
  std::vector<mpz_class> z(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& e = m.at(i, j);
      z[i * cols + j] = e.get_num() * (l / e.get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return z[i * cols + j]; };

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class q, rem;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pr = r;
    while (pr < rows && sgn(at(pr, col)) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(pr, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(at(i, col)) == 0) {
        // Still rescale trailing entries so they remain minors of the
        // original matrix (required for later exact divisions).
        for (std::size_t j = col + 1; j < cols; ++j) {
          mpz_class num = at(r, col) * at(i, j);
          mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
          if (sgn(rem) != 0) throw InvariantViolation("bareiss division not exact");
          at(i, j) = q;
        }
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class num = at(r, col) * at(i, j) - at(i, col) * at(r, j);
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (sgn(rem) != 0) throw InvariantViolation("bareiss division not exact");
        at(i, j) = q;
      }
      at(i, col) = 0;
    }
    prev = at(r, col);
    pivots.push_back(col);
    ++r;
  }

  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rat(z[i * cols + j]);
  return pivots;
}

}  // namespace lpr::field
