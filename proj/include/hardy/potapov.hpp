#pragma once

#include <vector>

#include "hardy/blaschke.hpp"

namespace hardy {

struct PeelStepRecord {
  cplx alpha;
  CMatrix proj;
  double division_residual = 0.0;
  double inner_residual = 0.0;  ///< two-sided innerness of the quotient
  /// ||P_stage - P_static||_F, where P_static comes from the quotient of the
  /// original input at the same zero. Zero when both readings agree.
  double static_proj_distance = 0.0;
};

struct PeelTrace {
  std::vector<PeelStepRecord> steps;  ///< in processing order (last zero first)
  CMatrix final_unitary;
};

struct PeelStepResult {
  BPFactor factor;
  RationalMatFn next;
  FiniteBlaschkeProduct theta_next;
  double division_residual = 0.0;
  double inner_residual = 0.0;
};

/// Removes one zero alpha of theta from the inner divisor delta of theta*I.
///
/// P is the range projection of (theta delta^*)(alpha); the quotient
/// delta (b_alpha P + I - P)^{-1} is formed by synthetic division of the
/// numerator by (z - alpha). Throws DivisionResidual if the remainder
/// exceeds tol.abs and std::invalid_argument if alpha is not a zero of theta.
PeelStepResult peel_step(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta, cplx alpha,
                         const Tolerance& tol = {});

struct PeelResult {
  BPProduct product;
  PeelTrace trace;
};

/// Blaschke-Potapov factorization of an inner divisor of theta*I.
///
/// Zeros are processed in reverse list order; factors are returned in
/// forward order with identity factors dropped. Throws NotInner if delta is
/// not two-sided inner, NotADivisor if theta delta^* is not analytic, and
/// ResidualFailure if the product does not reproduce delta.
PeelResult potapov_peel(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta, const Tolerance& tol = {});

/// Chooses theta from the denominator of phi (adding zeros at the
/// denominator points or the origin while theta phi^* stays non-analytic)
/// and peels. Throws NotInner or NotRational.
BPProduct inner_rational_to_bp(const RationalMatFn& phi, const Tolerance& tol = {});

/// theta whose zeros make theta phi^* analytic for analytic rational phi:
/// the denominator zeros plus max(0, deg N - #den) zeros at the origin.
FiniteBlaschkeProduct denominator_theta(const RationalMatFn& phi);

struct CoprimeFactorization {
  BPProduct delta;
  RationalMatFn delta_fn;
  RationalMatFn a;  ///< analytic, phi = delta a^*
  int truncation = 0;
  double residual = 0.0;
};

/// phi = delta a^* with delta the inner function of ker H_{phi^*}.
/// `K` is a lower bound for the Hankel truncation.
CoprimeFactorization coprime_factorize(const RationalMatFn& phi, int K = 0, const Tolerance& tol = {});

}  // namespace hardy
