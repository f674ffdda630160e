#include <gtest/gtest.h>

#include <cmath>

#include "hardy/divisors_zn.hpp"
#include "hardy/errors.hpp"
#include "hardy/fixtures.hpp"

using namespace hardy;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

MatPoly worked_divisor() {
  CMatrix a0(2, 2), a1(2, 2);
  a0 << kS, 0, kS, 0;
  a1 << 0, -kS, 0, kS;
  return MatPoly({a0, a1});
}

// Samples of z^N A(z)^*, analytic exactly when A divides z^N I.
GridSamples zn_times_adjoint(const RationalMatFn& A, int N, int g) {
  GridSamples S = adjoint(to_grid(A, g));
  for (int k = 0; k < S.size(); ++k) S[k] *= std::pow(grid_node(k, S.size()), N);
  return S;
}

}  // namespace

TEST(ClassifyZn, PowerOfZ) {
  const auto cert = classify_zn(MatPoly::monomial(3, 2), 2);
  EXPECT_LT((cert.bp.unitary - CMatrix::Identity(3, 3)).norm(), 1e-12);
  ASSERT_EQ(cert.bp.factors.size(), 2u);
  for (const auto& f : cert.bp.factors) {
    EXPECT_EQ(f.alpha, cplx(0.0));
    EXPECT_LT((f.proj - CMatrix::Identity(3, 3)).norm(), 1e-12);
  }
}

TEST(ClassifyZn, WorkedDivisor) {
  const auto cert = classify_zn(worked_divisor(), 1);
  CMatrix V(2, 2), P = CMatrix::Zero(2, 2);
  V << kS, -kS, kS, kS;
  P(1, 1) = 1.0;
  EXPECT_LT((cert.subspace_projs[1] - P).norm(), 1e-12);
  ASSERT_EQ(cert.bp.factors.size(), 1u);
  EXPECT_LT((cert.bp.factors[0].proj - P).norm(), 1e-12);
  EXPECT_LT((cert.bp.unitary - V).norm(), 1e-12);
  EXPECT_LT(cert.residual, 1e-12);
}

TEST(ClassifyZn, NonInnerPolynomialIsRejected) {
  CMatrix a1 = CMatrix::Zero(2, 2);
  a1(0, 1) = 1.0;
  try {
    classify_zn(MatPoly({CMatrix::Identity(2, 2), a1}), 1);
    FAIL() << "expected NotADivisor";
  } catch (const NotADivisor& e) {
    EXPECT_FALSE(e.condition().empty());
  }
}

TEST(ClassifyZn, DegreeAboveNIsRejected) {
  try {
    classify_zn(MatPoly::monomial(2, 3), 2);
    FAIL() << "expected NotADivisor";
  } catch (const NotADivisor& e) {
    EXPECT_EQ(e.condition(), "degree");
    EXPECT_EQ(e.index(), 3);
  }
}

TEST(ClassifyZn, OverlappingRangesReportDecomposition) {
  // Coefficients are partial isometries but both map onto e1.
  CMatrix a0 = CMatrix::Zero(2, 2), a1 = CMatrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a1(0, 1) = 1.0;
  try {
    classify_zn(MatPoly({a0, a1}), 1);
    FAIL() << "expected NotADivisor";
  } catch (const NotADivisor& e) {
    EXPECT_EQ(e.condition(), "range_decomposition");
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(ClassifyZn, TrailingZeroCoefficientsAreAccepted) {
  const auto cert = classify_zn(worked_divisor(), 3);
  EXPECT_EQ(cert.bp.factors.size(), 3u);
  EXPECT_LT(cert.bp.factors[1].proj.norm(), 1e-14);
  EXPECT_EQ(canonicalize(cert.bp).factors.size(), 1u);
}

TEST(ClassifyBAlpha, Examples) {
  const cplx a(0.3, -0.4);
  const RationalMatFn b(MatPoly({-a * CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)}), {a});
  const auto cert = classify_b_alpha_n(b, a, 1);
  ASSERT_EQ(cert.bp.factors.size(), 1u);
  EXPECT_EQ(cert.bp.factors[0].alpha, a);
  EXPECT_LT((cert.bp.factors[0].proj - CMatrix::Identity(2, 2)).norm(), 1e-10);
  EXPECT_LT((cert.bp.unitary - CMatrix::Identity(2, 2)).norm(), 1e-10);
  EXPECT_EQ(nontriviality_witness(cert), 1);

  const auto id = classify_b_alpha_n(RationalMatFn(MatPoly::identity(3)), a, 2);
  EXPECT_TRUE(canonicalize(id.bp).factors.empty());
  EXPECT_FALSE(nontriviality_witness(id).has_value());
}

TEST(ClassifyBAlpha, GeneratorRoundTrip) {
  fixtures::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx a = fixtures::random_disk_point(0.8, rng);
    const Index d = 2 + trial % 3;
    BPProduct B{fixtures::random_unitary(d, rng), {}};
    for (int m = 0; m < 2; ++m) B.factors.push_back({a, fixtures::random_projection(d, 1 + (trial + m) % d, rng)});
    const RationalMatFn A = expand(B);
    const auto cert = classify_b_alpha_n(A, a, 2);
    EXPECT_LT(sup_distance(expand(cert.bp), A), 1e-9);
  }
}

TEST(NontrivialityWitness, WorkedDivisor) {
  EXPECT_EQ(nontriviality_witness(classify_zn(worked_divisor(), 1)), 1);
  fixtures::Rng rng(1);
  EXPECT_FALSE(nontriviality_witness(classify_zn(MatPoly::constant(fixtures::random_unitary(3, rng)), 2)).has_value());
}

TEST(DivisorProperty, CertificatesAreSound) {
  fixtures::Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + trial % 4;
    const int N = 1 + trial % 3;
    BPProduct B{fixtures::random_unitary(d, rng), {}};
    for (int m = 0; m < N; ++m) B.factors.push_back({0.0, fixtures::random_projection(d, 1 + (trial * 7 + m) % d, rng)});
    const RationalMatFn A = expand(B);
    const auto cert = classify_zn(A.numerator(), N);
    EXPECT_LT(sup_distance(expand(cert.bp), A), 1e-9);
    // A truly divides z^N I: z^N A^* is analytic.
    EXPECT_NO_THROW(analytic_part_certify(zn_times_adjoint(A, N, 6), N));
  }
}

TEST(DivisorProperty, DivisorsOfZHaveOneNontrivialFactor) {
  fixtures::Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + trial % 5;
    const CMatrix V = fixtures::random_unitary(d, rng);
    const CMatrix P = fixtures::random_projection(d, trial % (d + 1), rng);
    const MatPoly A({V * (CMatrix::Identity(d, d) - P), V * P});
    const auto cert = classify_zn(A, 1);
    EXPECT_LE(canonicalize(cert.bp).factors.size(), 1u);
  }
}

TEST(ClassifyZn, NonNestedProductIsCertifiedThroughThePeel) {
  CMatrix P1 = CMatrix::Zero(2, 2), P2(2, 2);
  P1(0, 0) = 1.0;
  P2 << 0.5, 0.5, 0.5, 0.5;
  const BPProduct B{CMatrix::Identity(2, 2), {{0.0, P1}, {0.0, P2}}};
  const RationalMatFn A = expand(B);
  // The constant coefficient (I - P1)(I - P2) is not a partial isometry.
  EXPECT_FALSE(is_partial_isometry(A.numerator()[0]));
  const auto cert = classify_zn(A.numerator(), 2);
  EXPECT_FALSE(cert.coefficient_form);
  EXPECT_LT(cert.residual, 1e-10);
  EXPECT_EQ(cert.bp.factors.size(), 2u);
}

TEST(DivisorProperty, RandomProductsAtOneZeroAreClassified) {
  fixtures::Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx a = fixtures::random_disk_point(0.7, rng);
    const int factors = 1 + trial % 3;
    BPProduct B{fixtures::random_unitary(3, rng), {}};
    for (int m = 0; m < factors; ++m) B.factors.push_back({a, fixtures::random_projection(3, 1 + (trial + m) % 3, rng)});
    const RationalMatFn A = expand(B);
    const auto cert = classify_b_alpha_n(A, a, 3);
    EXPECT_LT(sup_distance(expand(cert.bp), A), 1e-9);
  }
}
