#include <gtest/gtest.h>

#include <random>

#include "acq/errors.hpp"
#include "acq/matrix.hpp"

namespace acq {
namespace {

const Field Q = Field::rational();

Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols,
                     int zero_percent = 30) {
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<int> percent(0, 99);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (percent(rng) >= zero_percent) m(i, j) = Scalar(f, entry(rng));
    }
  }
  return m;
}

TEST(Matrix, KronOfIdentities) {
  EXPECT_EQ(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)), Matrix::identity(Q, 6));
}

TEST(Matrix, KronShapeAndIndexConvention) {
  const Matrix a = Matrix::from_rows(Q, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 5}});
  const Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  // Left factor is the most significant index: k(3i+r, 3j+s) = a(i,j) b(r,s).
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(k(3 * i + r, 3 * j + s), a(i, j) * b(r, s));
      }
    }
  }
}

TEST(Matrix, MultiplyByIdentity) {
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(rng, Q, 3, 4);
  EXPECT_EQ(a * Matrix::identity(Q, 4), a);
  EXPECT_EQ(Matrix::identity(Q, 3) * a, a);
}

TEST(Matrix, ShapeMismatchThrows) {
  EXPECT_THROW(Matrix(Q, 2, 3) * Matrix(Q, 2, 3), DimensionMismatch);
  EXPECT_THROW(Matrix(Q, 2, 3) + Matrix(Q, 3, 2), DimensionMismatch);
  EXPECT_THROW(Matrix(Q, 2, 2) * Matrix(Field::prime(3), 2, 2), FieldMismatch);
}

TEST(Matrix, NullspaceExamples) {
  EXPECT_TRUE(nullspace(Matrix::identity(Q, 2)).empty());

  const Field f2 = Field::prime(2);
  const auto ones = nullspace(Matrix::from_rows(f2, {{1, 1}, {1, 1}}));
  ASSERT_EQ(ones.size(), 1u);
  EXPECT_EQ(ones[0], (Vector{Scalar(f2, 1), Scalar(f2, 1)}));

  const auto all = nullspace(Matrix(Q, 2, 2));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], (Vector{Scalar(Q, 1), Scalar(Q, 0)}));
  EXPECT_EQ(all[1], (Vector{Scalar(Q, 0), Scalar(Q, 1)}));
}

TEST(Matrix, NullspaceUsesFreeColumnsInOrder) {
  // x0 + 2 x1 - x3 = 0, x2 + x3 = 0; free columns 1 and 3.
  const auto basis = nullspace(Matrix::from_rows(Q, {{1, 2, 0, -1}, {0, 0, 1, 1}}));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], (Vector{Scalar(Q, -2), Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0)}));
  EXPECT_EQ(basis[1], (Vector{Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, -1), Scalar(Q, 1)}));
}

TEST(Matrix, InverseExamples) {
  EXPECT_EQ(mat_inverse(Matrix::identity(Q, 3)), Matrix::identity(Q, 3));
  Matrix half(Q, 1, 1);
  half(0, 0) = Scalar(Q, mpq_class(1, 2));
  EXPECT_EQ(mat_inverse(Matrix::from_rows(Q, {{2}})), half);
  EXPECT_THROW(mat_inverse(Matrix::from_rows(Q, {{1, 1}, {1, 1}})), SingularMatrix);
  EXPECT_THROW(mat_inverse(Matrix(Q, 2, 3)), DimensionMismatch);
}

TEST(Matrix, Powers) {
  const Matrix r = Matrix::from_rows(Q, {{0, -1}, {1, -1}});  // order 3
  EXPECT_TRUE(mat_pow(r, 0).is_identity());
  EXPECT_TRUE(mat_pow(r, 3).is_identity());
  EXPECT_EQ(mat_pow(r, -1), mat_pow(r, 2));
  EXPECT_EQ(mat_pow(r, -4), mat_inverse(r));
}

TEST(Matrix, TraceTransposeRank) {
  const Matrix a = Matrix::from_rows(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(a.trace(), Scalar(Q, 15));
  EXPECT_EQ(a.transpose()(0, 2), Scalar(Q, 7));
  EXPECT_EQ(matrix_rank(a), 2u);
  EXPECT_EQ(a.nonzeros(), 9u);
}

class MatrixProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MatrixProperty, InverseTimesMatrixIsIdentity) {
  const Field f = GetParam() == 0 ? Q : Field::prime(GetParam());
  std::mt19937_64 rng(100 + GetParam());
  int inverted = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix a = random_matrix(rng, f, n, n);
    try {
      const Matrix inv = mat_inverse(a);
      EXPECT_TRUE((a * inv).is_identity());
      EXPECT_TRUE((inv * a).is_identity());
      ++inverted;
    } catch (const SingularMatrix&) {
      EXPECT_LT(matrix_rank(a), n);
    }
  }
  EXPECT_GT(inverted, 5);
}

TEST_P(MatrixProperty, KronMixedProduct) {
  const Field f = GetParam() == 0 ? Q : Field::prime(GetParam());
  std::mt19937_64 rng(200 + GetParam());
  for (int i = 0; i < 30; ++i) {
    const std::size_t r1 = 1 + rng() % 3, c1 = 1 + rng() % 3, k1 = 1 + rng() % 3;
    const std::size_t r2 = 1 + rng() % 3, c2 = 1 + rng() % 3, k2 = 1 + rng() % 3;
    const Matrix a = random_matrix(rng, f, r1, c1), cm = random_matrix(rng, f, c1, k1);
    const Matrix b = random_matrix(rng, f, r2, c2), d = random_matrix(rng, f, c2, k2);
    EXPECT_EQ(kron(a, b) * kron(cm, d), kron(a * cm, b * d));
  }
}

TEST_P(MatrixProperty, RankNullity) {
  const Field f = GetParam() == 0 ? Q : Field::prime(GetParam());
  std::mt19937_64 rng(300 + GetParam());
  for (int i = 0; i < 60; ++i) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    const Matrix a = random_matrix(rng, f, rows, cols, 50);
    const auto basis = nullspace(a);
    EXPECT_EQ(basis.size() + matrix_rank(a), cols);
    for (const Vector& v : basis) {
      for (const Scalar& s : mat_vec(a, v)) EXPECT_TRUE(s.is_zero());
    }
  }
}

TEST_P(MatrixProperty, RrefIsReducedWithUnitPivots) {
  const Field f = GetParam() == 0 ? Q : Field::prime(GetParam());
  std::mt19937_64 rng(400 + GetParam());
  for (int i = 0; i < 40; ++i) {
    const Matrix a = random_matrix(rng, f, 1 + rng() % 5, 1 + rng() % 5);
    const RowEchelon e = rref(a);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      EXPECT_TRUE(e.reduced(r, e.pivots[r]).is_one());
      for (std::size_t other = 0; other < e.reduced.rows(); ++other) {
        if (other != r) EXPECT_TRUE(e.reduced(other, e.pivots[r]).is_zero());
      }
      if (r > 0) EXPECT_LT(e.pivots[r - 1], e.pivots[r]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, MatrixProperty, ::testing::Values(0, 2, 3, 101));

}  // namespace
}  // namespace acq
