#include <doctest.h>

#include "lpr/linalg.hpp"
#include "lpr/prime_field.hpp"
#include "lpr/rng.hpp"

using lpr::Rng;
using lpr::field::Matrix;
using lpr::field::PrimeField;
using lpr::field::Rat;
using lpr::field::RationalField;

namespace {

template <class F>
Matrix<typename F::Elem> random_matrix(const F& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<typename F::Elem> m(rows, cols, f.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.sample(rng);
  return m;
}

// Rank-r matrix as a product of random rows x cols factors.
Matrix<std::uint64_t> planted_rank_matrix(const PrimeField& f, std::size_t n, std::size_t r,
                                          Rng& rng) {
  const auto b = random_matrix(f, n, r, rng);
  const auto c = random_matrix(f, r, n, rng);
  return lpr::field::mul(f, b, c);
}

}  // namespace

TEST_CASE("rank of identity and rank-one matrices") {
  const RationalField fq;
  const PrimeField fp;

  CHECK(lpr::field::rank(fq, lpr::field::identity(fq, 3)) == 3);
  CHECK(lpr::field::rank(fp, lpr::field::identity(fp, 3)) == 3);

  Matrix<Rat> ones(2, 2, Rat(1));
  CHECK(lpr::field::rank(fq, ones) == 1);
  Matrix<std::uint64_t> ones_p(2, 2, 1);
  CHECK(lpr::field::rank(fp, ones_p) == 1);

  CHECK(lpr::field::rank(fq, Matrix<Rat>()) == 0);
  CHECK(lpr::field::rank(fp, Matrix<std::uint64_t>()) == 0);
}

TEST_CASE("rank equals rank of the transpose") {
  const PrimeField fp;
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    const std::size_t rows = 1 + rng.below(12), cols = 1 + rng.below(12);
    const std::size_t r = rng.below(std::min(rows, cols) + 1);
    const auto b = random_matrix(fp, rows, r, rng);
    const auto c = random_matrix(fp, r, cols, rng);
    const auto m = lpr::field::mul(fp, b, c);
    CHECK(lpr::field::rank(fp, m) == lpr::field::rank(fp, lpr::field::transpose(m)));
  }
}

TEST_CASE("planted rank is recovered on 50x50 prime-field matrices") {
  const PrimeField fp;
  Rng rng(11);
  for (std::size_t r : {0u, 1u, 7u, 25u, 50u}) {
    const auto m = planted_rank_matrix(fp, 50, r, rng);
    CHECK(lpr::field::rank(fp, m) == r);
  }
}

TEST_CASE("left kernel dimension and exact annihilation") {
  const PrimeField fp;
  const RationalField fq;
  Rng rng(23);

  CHECK(lpr::field::left_kernel_basis(fq, lpr::field::identity(fq, 2)).empty());

  for (int it = 0; it < 15; ++it) {
    const std::size_t rows = 1 + rng.below(10), cols = 1 + rng.below(10);
    const std::size_t r = rng.below(std::min(rows, cols) + 1);
    const auto b = random_matrix(fp, rows, r, rng);
    const auto c = random_matrix(fp, r, cols, rng);
    const auto m = lpr::field::mul(fp, b, c);
    const auto rank = lpr::field::rank(fp, m);
    const auto basis = lpr::field::left_kernel_basis(fp, m);
    CHECK(basis.size() == rows - rank);
    for (const auto& w : basis) {
      const auto residual = lpr::field::vec_mat_mul(fp, w, m);
      for (const auto& x : residual) CHECK(fp.is_zero(x));
      // normalized representative
      for (const auto& x : w) {
        if (fp.is_zero(x)) continue;
        CHECK(x == fp.one());
        break;
      }
    }
  }
}

TEST_CASE("rational kernel vectors annihilate exactly") {
  const RationalField fq;
  Rng rng(29);
  for (int it = 0; it < 10; ++it) {
    const std::size_t rows = 2 + rng.below(6), cols = 2 + rng.below(6);
    // Random small-rational matrix with planted row dependencies.
    Matrix<Rat> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Rat(static_cast<long>(rng.below(19)) - 9) /
                     Rat(1 + static_cast<long>(rng.below(6)));
    const auto rank = lpr::field::rank(fq, m);
    const auto basis = lpr::field::left_kernel_basis(fq, m);
    CHECK(basis.size() == rows - rank);
    for (const auto& w : basis) {
      const auto residual = lpr::field::vec_mat_mul(fq, w, m);
      for (const auto& x : residual) CHECK(fq.is_zero(x));
    }
  }
}

TEST_CASE("bareiss rank agrees with plain rational elimination") {
  const RationalField fq;
  Rng rng(31);
  for (int it = 0; it < 10; ++it) {
    const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    Matrix<Rat> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Rat(static_cast<long>(rng.below(7)) - 3);
    auto copy = m;
    const auto pivots = lpr::field::gauss_echelon(fq, copy);
    CHECK(lpr::field::rank(fq, m) == pivots.size());
  }
}

TEST_CASE("prime-field rank never exceeds the rational rank on integer matrices") {
  const RationalField fq;
  const PrimeField fp;
  Rng rng(37);
  std::size_t equal = 0;
  const std::size_t trials = 100;
  for (std::size_t it = 0; it < trials; ++it) {
    const std::size_t n = 2 + rng.below(7);
    Matrix<Rat> mq(n, n);
    Matrix<std::uint64_t> mp(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = static_cast<long>(rng.below(2001)) - 1000;
        mq.at(i, j) = Rat(v);
        mp.at(i, j) = fp.from_int(v);
      }
    const auto rq = lpr::field::rank(fq, mq);
    const auto rp = lpr::field::rank(fp, mp);
    CHECK(rp <= rq);
    if (rp == rq) ++equal;
  }
  CHECK(equal >= trials * 99 / 100);
}

TEST_CASE("schur complement identity") {
  const RationalField fq;
  const PrimeField fp;

  // identity(4) / identity-block = identity(2)
  const auto id4 = lpr::field::identity(fq, 4);
  const auto sc = lpr::field::schur_complement(fq, id4, 2);
  CHECK(sc == lpr::field::identity(fq, 2));

  // rank(M) = block + rank(M/A) on 200 randomized matrices.
  Rng rng(41);
  std::size_t done = 0;
  while (done < 200) {
    const std::size_t bs = 1 + rng.below(4);
    const std::size_t n = bs + 1 + rng.below(5);
    auto m = random_matrix(fp, n, n, rng);
    Matrix<std::uint64_t> a(bs, bs);
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) a.at(i, j) = m.at(i, j);
    if (lpr::field::rank(fp, a) != bs) continue;  // needs an invertible block
    const auto s = lpr::field::schur_complement(fp, m, bs);
    CHECK(lpr::field::rank(fp, m) == bs + lpr::field::rank(fp, s));
    ++done;
  }

  // singular leading block
  Matrix<Rat> singular(2, 2, Rat(0));
  singular.at(0, 1) = 1;
  CHECK_THROWS_AS((void)lpr::field::schur_complement(fq, singular, 1), lpr::SingularBlock);
}
