#pragma once

#include <optional>
#include <vector>

#include "hardy/blaschke.hpp"

namespace hardy {

enum class Side { left, right };

struct CoprimeWitness {
  cplx alpha;
  int defect_dim = 0;
  std::optional<BPFactor> divisor;
  /// Largest non-analytic or out-of-degree spectral bin of the quotient.
  double residual = 0.0;
};

struct CoprimeReport {
  Side side = Side::left;
  bool verdict = true;  ///< true exactly when witnesses is empty
  std::vector<CoprimeWitness> witnesses;
};

/// Left coprimeness of phi (E x D) and theta I_E: phi(alpha) must be onto for
/// every distinct zero alpha of theta. Each failure carries the left divisor
/// b_alpha P + (I - P), P the projection onto ran phi(alpha)^perp, together
/// with the residual of certifying B^{-1} phi analytic.
CoprimeReport left_coprime_with_theta(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta,
                                      const Tolerance& tol = {});

/// Right coprimeness: phi(alpha) must be injective. Failures carry the right
/// divisor built on ker phi(alpha), certified through phi B^{-1}.
CoprimeReport right_coprime_with_theta(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta,
                                       const Tolerance& tol = {});

/// For square phi: left verdict, right verdict and invertibility of phi at
/// every zero. Throws CertificationFailure when they disagree.
bool matrix_coprime_equivalence_check(const MatPoly& phi, const FiniteBlaschkeProduct& theta,
                                      const Tolerance& tol = {});

/// ran phi(alpha) + ran psi(alpha) = C^E at every denominator zero of either
/// function and at the origin.
bool bp_coprime_check(const RationalMatFn& phi, const RationalMatFn& psi, const Tolerance& tol = {});

struct CommonDefect {
  cplx alpha;
  int dimension;  ///< dim of ran phi(alpha)^perp intersected with ran psi(alpha)^perp
};
/// First point where bp_coprime_check fails, if any.
std::optional<CommonDefect> bp_common_defect(const RationalMatFn& phi, const RationalMatFn& psi,
                                             const Tolerance& tol = {});

}  // namespace hardy
