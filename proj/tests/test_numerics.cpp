#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hardy/numerics.hpp"

using namespace hardy;

namespace {

CMatrix random_unitary(Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix Z(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) Z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(Z);
  return qr.householderQ() * CMatrix::Identity(d, d);
}

CMatrix mat(std::initializer_list<std::initializer_list<cplx>> rows) {
  CMatrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (auto r : rows) {
    Index j = 0;
    for (cplx v : r) M(i, j++) = v;
    ++i;
  }
  return M;
}

}  // namespace

TEST(RangeProjection, ZeroMatrixGivesZero) {
  EXPECT_LT(range_projection(CMatrix::Zero(2, 2)).norm(), 1e-15);
}

TEST(RangeProjection, DiagonalProjectionIsFixed) {
  const CMatrix P = mat({{1, 0}, {0, 0}});
  EXPECT_LT((range_projection(P) - P).norm(), 1e-14);
}

TEST(RangeProjection, RankOneColumn) {
  CMatrix v(2, 1);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const CMatrix P = range_projection(v);
  EXPECT_LT((P - 0.5 * mat({{1, 1}, {1, 1}})).norm(), 1e-14);
  EXPECT_TRUE(is_projection(P));
}

TEST(KernelProjection, Examples) {
  EXPECT_LT(kernel_projection(CMatrix::Identity(3, 3)).norm(), 1e-15);
  EXPECT_LT((kernel_projection(CMatrix::Zero(2, 2)) - CMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT((kernel_projection(mat({{1, 0}, {0, 0}})) - mat({{0, 0}, {0, 1}})).norm(), 1e-14);
}

TEST(PartialIsometry, Examples) {
  EXPECT_TRUE(is_partial_isometry(CMatrix::Identity(4, 4)));
  EXPECT_FALSE(is_partial_isometry(2.0 * CMatrix::Identity(2, 2)));
  EXPECT_TRUE(is_partial_isometry(mat({{1, 0}, {1, 0}}) / std::sqrt(2.0)));
}

TEST(UnitaryAndProjection, Examples) {
  EXPECT_TRUE(is_unitary(mat({{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_projection(0.5 * mat({{1, 1}, {1, 1}})));
  EXPECT_FALSE(is_unitary(mat({{1, 0}, {0, 0}})));
  EXPECT_FALSE(is_unitary(CMatrix::Identity(2, 3)));
}

TEST(OrthogonalDecomposition, Examples) {
  std::vector<CMatrix> a{mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}})};
  EXPECT_TRUE(orthogonal_decomposition_check(a));
  std::vector<CMatrix> b{CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)};
  EXPECT_FALSE(orthogonal_decomposition_check(b));
  std::vector<CMatrix> c{0.5 * mat({{1, 1}, {1, 1}}), 0.5 * mat({{1, -1}, {-1, 1}})};
  EXPECT_TRUE(orthogonal_decomposition_check(c));
}

TEST(Tolerance, Validation) {
  EXPECT_NO_THROW(Tolerance{}.validate());
  EXPECT_THROW((Tolerance{0.0, 1e-9}.validate()), std::invalid_argument);
  EXPECT_THROW((Tolerance{1e-8, 1.0}.validate()), std::invalid_argument);
}

TEST(NumericsProperty, RangePlusKernelOfAdjointIsIdentity) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const Index r = 1 + trial % 5, c = 1 + (trial / 5) % 4;
    const Index k = trial % 3;
    CMatrix L(r, k + 1), R(k + 1, c);
    for (Index i = 0; i < L.size(); ++i) L.data()[i] = cplx(g(rng), g(rng));
    for (Index i = 0; i < R.size(); ++i) R.data()[i] = cplx(g(rng), g(rng));
    const CMatrix A = L * R;
    const CMatrix sum = range_projection(A) + kernel_projection(A.adjoint());
    EXPECT_LT((sum - CMatrix::Identity(r, r)).norm(), 1e-10);
  }
}

TEST(NumericsProperty, RangeOfProjectionIsItself) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = 2 + trial % 6;
    const CMatrix U = random_unitary(d, rng);
    const CMatrix Q = U.leftCols(trial % (d + 1));
    const CMatrix P = Q * Q.adjoint();
    ASSERT_TRUE(is_projection(P));
    EXPECT_LT((range_projection(P) - P).norm(), 1e-10);
  }
}

TEST(NumericsProperty, TruncatedUnitaryProductsArePartialIsometries) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = 2 + trial % 7;
    Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(d);
    for (Index i = 0; i < trial % (d + 1); ++i) diag(i) = 1.0;
    const CMatrix U = random_unitary(d, rng) * diag.asDiagonal() * random_unitary(d, rng);
    EXPECT_TRUE(is_partial_isometry(U));
    EXPECT_EQ(numerical_rank(U), trial % (d + 1));
  }
}
