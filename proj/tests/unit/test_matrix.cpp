#include <gtest/gtest.h>

#include "linjac/error.hpp"
#include "linjac/stats.hpp"
#include "test_helpers.hpp"

using namespace linjac;
using namespace linjac::testing;

TEST(Matrix, MulMatchesTripleLoop) {
  const PrimeField f(7);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(f, 5, 5, rng), b = random_matrix(f, 5, 5, rng);
    EXPECT_EQ(mat_mul(f, a, b), naive_mul(7, a, b));
  }
  const u64 big = (u64{1} << 61) - 1;
  const PrimeField g(big);
  const Matrix a = random_matrix(g, 9, 40, rng), b = random_matrix(g, 40, 6, rng);
  EXPECT_EQ(mat_mul(g, a, b), naive_mul(big, a, b));
}

TEST(Matrix, MulIdentityZeroAndShape) {
  const PrimeField f(1009);
  Rng rng(1);
  const Matrix b = random_matrix(f, 4, 3, rng);
  EXPECT_EQ(mat_mul(f, Matrix::identity(4), b), b);
  EXPECT_TRUE(mat_mul(f, b, Matrix(3, 2)).is_zero());
  try {
    mat_mul(f, b, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Matrix, LinearCombinationMatchesNaive) {
  for (u64 p : {u64{1009}, (u64{1} << 61) - 1}) {
    const PrimeField f(p);
    Rng rng(p);
    std::vector<Matrix> mats;
    Vec c;
    for (int i = 0; i < 30; ++i) {
      mats.push_back(random_matrix(f, 3, 4, rng));
      c.push_back(f.sample(rng));
    }
    Matrix want(3, 4);
    for (int i = 0; i < 30; ++i)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 4; ++s) want(r, s) = f.add(want(r, s), f.mul(c[i], mats[i](r, s)));
    EXPECT_EQ(linear_combination(f, c, mats), want);
  }
}

TEST(Echelon, CanonicalFormIsIdempotent) {
  const PrimeField f(1009);
  Rng rng(2);
  const Subspace s = column_echelon(f, random_matrix(f, 8, 3, rng));
  EXPECT_EQ(column_echelon(f, s.basis()), s);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    EXPECT_EQ(s.rows()(i, s.pivots()[i]), 1u);
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (j != i) EXPECT_EQ(s.rows()(j, s.pivots()[i]), 0u);
    if (i > 0) EXPECT_LT(s.pivots()[i - 1], s.pivots()[i]);
  }
}

TEST(Echelon, DuplicatedColumnDropsRank) {
  const PrimeField f(1009);
  Rng rng(5);
  Matrix a = random_matrix(f, 6, 3, rng);
  Matrix dup(6, 4);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 3; ++c) dup(r, c) = a(r, c);
    dup(r, 3) = a(r, 1);
  }
  EXPECT_EQ(column_echelon(f, dup).dim(), 3u);
}

TEST(Echelon, InvariantUnderChangeOfBasis) {
  const PrimeField f(1009);
  Rng rng(11);
  const Matrix a = random_matrix(f, 10, 4, rng);
  const Subspace want = column_echelon(f, a);
  for (int t = 0; t < 100; ++t) {
    Matrix g = random_matrix(f, 4, 4, rng);
    if (rank(f, g) < 4) continue;
    EXPECT_EQ(column_echelon(f, mat_mul(f, a, g)), want);
  }
}

TEST(Kernel, Basics) {
  const PrimeField f(101);
  EXPECT_EQ(kernel_basis(f, Matrix::identity(5)).dim(), 0u);
  EXPECT_EQ(kernel_basis(f, Matrix(3, 7)).dim(), 7u);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(f, 8, 12, rng);
    if (t % 3 == 0)
      for (std::size_t c = 0; c < 12; ++c) a(7, c) = a(0, c);  // force a rank drop
    const Subspace k = kernel_basis(f, a);
    EXPECT_EQ(k.dim(), 12 - rank(f, a));
    for (std::size_t i = 0; i < k.dim(); ++i) {
      const Vec v = mat_vec(f, a, k.vector(i));
      for (u64 x : v) EXPECT_EQ(x, 0u);
    }
  }
}

TEST(Subspaces, SumIntersectGrassmann) {
  const PrimeField f(1009);
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 9;
    const Subspace u = row_span(f, random_matrix(f, rng.below(n), n, rng));
    const Subspace w = row_span(f, random_matrix(f, rng.below(n), n, rng));
    const Subspace s = subspace_ops(f, u, w, SubspaceOp::Sum);
    const Subspace i = subspace_ops(f, u, w, SubspaceOp::Intersect);
    ASSERT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    ASSERT_TRUE(subspace_ops(f, s, u, SubspacePredicate::Contains));
    ASSERT_TRUE(subspace_ops(f, u, i, SubspacePredicate::Contains));
    ASSERT_TRUE(w.contains(f, i));
  }
  const Subspace u = row_span(f, random_matrix(f, 3, 6, rng));
  EXPECT_TRUE(subspace_ops(f, subspace_sum(f, u, u), u, SubspacePredicate::Equal));
  EXPECT_EQ(subspace_intersect(f, u, u), u);
  EXPECT_THROW(subspace_sum(f, u, Subspace(5)), Error);
}

TEST(Subspaces, ZeroSpaceIsLegal) {
  const PrimeField f(1009);
  const Subspace z(6);
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_EQ(z.codim(), 6u);
  EXPECT_EQ(constraint_matrix(f, z).rows(), 6u);
  EXPECT_EQ(subspace_sum(f, z, full_space(6)), full_space(6));
}

TEST(Incremental, MatchesRank) {
  const PrimeField f(13);
  Rng rng(9);
  const Matrix a = random_matrix(f, 5, 9, rng);
  IncrementalEchelon inc(f, 9);
  for (std::size_t r = 0; r < 5; ++r) inc.add(a.row(r));
  EXPECT_FALSE(inc.add(a.row(2)));
  EXPECT_EQ(inc.rank(), rank(f, a));
}

TEST(Stats, CountsAndResets) {
  const PrimeField f(1009);
  take_stats();
  kernel_basis(f, Matrix::identity(3));
  const OpStats s = take_stats();
  EXPECT_EQ(s.kernel_calls, 1u);
  EXPECT_GE(s.echelon_calls, 1u);
  EXPECT_EQ(take_stats(), OpStats{});
}
