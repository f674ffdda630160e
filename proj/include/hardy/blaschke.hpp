#pragma once

#include <vector>

#include "hardy/funcspace.hpp"

namespace hardy {

/// nu * prod_k b_{alpha_k}(z), |nu| = 1.
struct FiniteBlaschkeProduct {
  cplx unimodular{1.0, 0.0};
  std::vector<cplx> zeros;

  int degree() const { return static_cast<int>(zeros.size()); }
  cplx eval(cplx z) const;
  /// Zeros with duplicates (within eps) removed, in first-seen order.
  std::vector<cplx> distinct_zeros(double eps = 1e-12) const;
  /// Throws std::invalid_argument on |nu| != 1 or a zero outside the open disk.
  void validate() const;
};

/// b_alpha(z) P + (I - P)
struct BPFactor {
  cplx alpha;
  CMatrix proj;

  Index dim() const { return proj.rows(); }
  CMatrix eval(cplx z) const;
  /// Numerator coefficients over (1 - conj(alpha) z).
  MatPoly numerator() const;
  void validate(const Tolerance& tol = {}) const;
};

/// V B_1(z) B_2(z) ... B_M(z)
struct BPProduct {
  CMatrix unitary;
  std::vector<BPFactor> factors;

  Index dim() const { return unitary.rows(); }
  CMatrix eval(cplx z) const;
  std::vector<cplx> alphas() const;
  void validate(const Tolerance& tol = {}) const;
};

CMatrix bp_eval(const BPFactor& B, cplx z);
CMatrix bp_eval(const BPProduct& B, cplx z);

/// Scalar 1x1 rational function with den_zeros = zeros.
RationalMatFn expand(const FiniteBlaschkeProduct& theta);
/// Exact numerator product; den_zeros = all factor alphas.
RationalMatFn expand(const BPProduct& B);

/// Samples of conj(b_alpha(z_k)) P + (I - P), i.e. B(z_k)^* = B(z_k)^{-1}.
GridSamples bp_inverse_samples(const BPFactor& B, int grid_log2);

/// Drops factors whose projection has numerical rank 0.
BPProduct canonicalize(const BPProduct& B, const Tolerance& tol = {});

}  // namespace hardy
