#include <gtest/gtest.h>

#include <cmath>

#include "hardy/divisors_zn.hpp"
#include "hardy/errors.hpp"
#include "hardy/fixtures.hpp"
#include "hardy/potapov.hpp"

using namespace hardy;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

MatPoly worked_divisor() {
  CMatrix a0(2, 2), a1(2, 2);
  a0 << kS, 0, kS, 0;
  a1 << 0, -kS, 0, kS;
  return MatPoly({a0, a1});
}

CMatrix worked_unitary() {
  CMatrix V(2, 2);
  V << kS, -kS, kS, kS;
  return V;
}

CMatrix e22() {
  CMatrix P = CMatrix::Zero(2, 2);
  P(1, 1) = 1.0;
  return P;
}

RationalMatFn scalar_blaschke_times_identity(const std::vector<cplx>& zeros, Index d) {
  const RationalMatFn theta = expand(FiniteBlaschkeProduct{1.0, zeros});
  std::vector<CMatrix> c;
  for (const auto& t : theta.numerator().coeffs()) c.push_back(t(0, 0) * CMatrix::Identity(d, d));
  return {MatPoly(c), zeros, 0};
}

}  // namespace

TEST(PeelStep, WholeFactor) {
  const auto r = peel_step(RationalMatFn(MatPoly::monomial(2, 1)), {1.0, {0.0}}, 0.0);
  EXPECT_LT((r.factor.proj - CMatrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_LT(sup_distance(r.next, RationalMatFn(MatPoly::identity(2))), 1e-12);
  EXPECT_TRUE(r.theta_next.zeros.empty());
}

TEST(PeelStep, TrivialDivisorGivesIdentityFactor) {
  const auto r = peel_step(RationalMatFn(MatPoly::identity(3)), {1.0, {0.0}}, 0.0);
  EXPECT_LT(r.factor.proj.norm(), 1e-12);
  EXPECT_LT(sup_distance(r.next, RationalMatFn(MatPoly::identity(3))), 1e-12);
}

TEST(PeelStep, WorkedDivisor) {
  const auto r = peel_step(RationalMatFn(worked_divisor()), {1.0, {0.0}}, 0.0);
  EXPECT_LT((r.factor.proj - e22()).norm(), 1e-12);
  EXPECT_LT(sup_distance(r.next, RationalMatFn(MatPoly::constant(worked_unitary()))), 1e-12);
  EXPECT_LT(r.division_residual, 1e-12);
}

TEST(PeelStep, RejectsForeignZero) {
  EXPECT_THROW(peel_step(RationalMatFn(MatPoly::monomial(2, 1)), {1.0, {0.0}}, 0.5), std::invalid_argument);
}

TEST(PotapovPeel, ScalarTimesIdentity) {
  const std::vector<cplx> zeros{0.0, 0.3, cplx(0, -0.5)};
  const RationalMatFn delta = scalar_blaschke_times_identity(zeros, 4);
  const auto out = potapov_peel(delta, {1.0, zeros});
  ASSERT_EQ(out.product.factors.size(), 3u);
  for (std::size_t n = 0; n < 3; ++n) {
    EXPECT_LT(std::abs(out.product.factors[n].alpha - zeros[n]), 1e-15);
    EXPECT_LT((out.product.factors[n].proj - CMatrix::Identity(4, 4)).norm(), 1e-9);
  }
  EXPECT_LT((out.product.unitary - CMatrix::Identity(4, 4)).norm(), 1e-9);
  EXPECT_LT(sup_distance(expand(out.product), delta), 1e-9);
}

TEST(PotapovPeel, ConstantUnitary) {
  fixtures::Rng rng(41);
  const CMatrix W = fixtures::random_unitary(3, rng);
  const auto out = potapov_peel(RationalMatFn(MatPoly::constant(W)), {1.0, {0.2, cplx(-0.1, 0.4)}});
  EXPECT_TRUE(out.product.factors.empty());
  EXPECT_LT((out.product.unitary - W).norm(), 1e-10);
}

TEST(PotapovPeel, GeneratorRoundTrip) {
  fixtures::Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const BPProduct B = fixtures::random_bp_product({6, 1 + trial % 4, 0.9, 0.3}, rng);
    const RationalMatFn delta = expand(B);
    const auto out = potapov_peel(delta, {1.0, B.alphas()});
    EXPECT_LT(sup_distance(expand(out.product), delta), 1e-8);
    for (const auto& s : out.trace.steps) {
      EXPECT_LT(s.inner_residual, 1e-8);
      EXPECT_LT(s.division_residual, 1e-8);
    }
  }
}

TEST(PotapovPeel, ThetaWithExtraZeros) {
  fixtures::Rng rng(43);
  const BPProduct B = fixtures::random_bp_product({3, 2, 0.6, 0.0}, rng);
  std::vector<cplx> zeros = B.alphas();
  zeros.insert(zeros.begin() + 1, cplx(0.1, 0.1));
  const auto out = potapov_peel(expand(B), {1.0, zeros});
  EXPECT_LT(sup_distance(expand(out.product), expand(B)), 1e-8);
}

TEST(PotapovPeel, Preconditions) {
  CMatrix d0 = CMatrix::Zero(2, 2), d1 = CMatrix::Zero(2, 2);
  d0(1, 1) = 0.5;
  d1(0, 0) = 1.0;
  EXPECT_THROW(potapov_peel(RationalMatFn(MatPoly({d0, d1})), {1.0, {0.0}}), NotInner);
  EXPECT_THROW(potapov_peel(RationalMatFn(MatPoly::monomial(2, 2)), {1.0, {0.0}}), NotADivisor);
  EXPECT_THROW(potapov_peel(RationalMatFn(MatPoly::monomial(2, 1)), {1.0, {0.5}}), NotADivisor);
}

TEST(PotapovPeel, DistinctZerosStaticAndStageProjectionsAgree) {
  fixtures::Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    BPProduct B{fixtures::random_unitary(3, rng), {}};
    // Commuting projections: the static reading is exact for them.
    const CMatrix U = fixtures::random_unitary(3, rng);
    for (int m = 0; m < 3; ++m) {
      const CMatrix e = U.col(m);
      B.factors.push_back({fixtures::random_disk_point(0.8, rng), e * e.adjoint()});
    }
    const auto out = potapov_peel(expand(B), {1.0, B.alphas()});
    for (const auto& s : out.trace.steps) EXPECT_LT(s.static_proj_distance, 1e-8);
  }
}

TEST(PotapovPeel, DroppingAFactorBreaksEquality) {
  fixtures::Rng rng(45);
  const BPProduct B = fixtures::random_bp_product({4, 3, 0.8, 0.0}, rng);
  const RationalMatFn delta = expand(B);
  const auto out = potapov_peel(delta, {1.0, B.alphas()});
  for (std::size_t drop = 0; drop < out.product.factors.size(); ++drop) {
    BPProduct partial = out.product;
    partial.factors.erase(partial.factors.begin() + static_cast<long>(drop));
    EXPECT_GT(sup_distance(expand(partial), delta), 1e-8);
  }
}

TEST(PotapovPeel, AgreesWithClassifyWhenZerosCoincide) {
  fixtures::Rng rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx a = fixtures::random_disk_point(0.7, rng);
    BPProduct B{fixtures::random_unitary(3, rng), {}};
    for (int m = 0; m < 3; ++m) B.factors.push_back({a, fixtures::random_projection(3, 1 + (m + trial) % 3, rng)});
    const RationalMatFn delta = expand(B);
    const auto peeled = potapov_peel(delta, {1.0, B.alphas()});
    const auto cert = classify_b_alpha_n(delta, a, 3);
    EXPECT_TRUE(align_right_unitary(expand(peeled.product), expand(cert.bp), {1e-8, 1e-9}).has_value());
  }
}

TEST(InnerRationalToBp, Examples) {
  const BPProduct zn = inner_rational_to_bp(RationalMatFn(MatPoly::monomial(2, 3)));
  ASSERT_EQ(zn.factors.size(), 3u);
  for (const auto& f : zn.factors) {
    EXPECT_EQ(f.alpha, cplx(0.0));
    EXPECT_LT((f.proj - CMatrix::Identity(2, 2)).norm(), 1e-10);
  }

  const BPProduct w = inner_rational_to_bp(RationalMatFn(worked_divisor()));
  ASSERT_EQ(w.factors.size(), 1u);
  EXPECT_LT((w.factors[0].proj - e22()).norm(), 1e-10);
  EXPECT_LT((w.unitary - worked_unitary()).norm(), 1e-10);
}

TEST(InnerRationalToBp, RepeatedZero) {
  fixtures::Rng rng(47);
  BPProduct B{fixtures::random_unitary(3, rng), {}};
  for (int m = 0; m < 4; ++m) B.factors.push_back({0.4, fixtures::random_projection(3, 1 + m % 3, rng)});
  const RationalMatFn full = expand(B);
  EXPECT_LT(sup_distance(expand(inner_rational_to_bp(full)), full), 1e-8);
}

TEST(InnerRationalToBp, AugmentsOriginZerosMissingFromTheDenominator) {
  fixtures::Rng rng(48);
  BPProduct B{fixtures::random_unitary(3, rng), {}};
  for (cplx a : {cplx(0.0), cplx(0.4), cplx(0.0), cplx(0.4)})
    B.factors.push_back({a, fixtures::random_projection(3, 2, rng)});
  const RationalMatFn full = expand(B);
  // (1 - 0 z) = 1, so the origin zeros can be dropped from the denominator.
  const RationalMatFn reduced(full.numerator(), {0.4, 0.4}, 0);
  const BPProduct out = inner_rational_to_bp(reduced);
  EXPECT_LT(sup_distance(expand(out), full), 1e-8);
}

TEST(InnerRationalToBp, NonInnerIsRejected) {
  EXPECT_THROW(inner_rational_to_bp(RationalMatFn(MatPoly::constant(2.0 * CMatrix::Identity(2, 2)))), NotInner);
}
