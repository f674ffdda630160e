#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hardy {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Residual and rank thresholds.
///
/// `abs` bounds Frobenius-norm residuals; `rank_rel` is the relative
/// singular-value cutoff: a singular value counts toward the rank iff
/// sigma_i > rank_rel * sigma_max.
struct Tolerance {
  double abs = 1e-8;
  double rank_rel = 1e-9;

  /// Throws std::invalid_argument unless abs > 0 and 0 < rank_rel < 1.
  void validate() const;
};

double frobenius(const CMatrix& A);
bool all_finite(const CMatrix& A);

/// Number of singular values above rank_rel * sigma_max (0 for the zero matrix).
int numerical_rank(const CMatrix& A, const Tolerance& tol = {});

/// Orthonormal basis (as columns) of the numerical range of A.
CMatrix range_basis(const CMatrix& A, const Tolerance& tol = {});
/// Orthonormal basis (as columns) of the numerical kernel of A.
CMatrix kernel_basis(const CMatrix& A, const Tolerance& tol = {});

/// Hermitian idempotent onto the span of left singular vectors with
/// sigma_i > rank_rel * sigma_max. Zero matrix maps to the zero projection.
CMatrix range_projection(const CMatrix& A, const Tolerance& tol = {});
/// Range projection that also discards singular values <= tol.abs, so a
/// matrix at noise level maps to the zero projection.
CMatrix significant_range_projection(const CMatrix& A, const Tolerance& tol = {});
/// Hermitian idempotent onto the numerical kernel; equals I - range_projection(A*).
CMatrix kernel_projection(const CMatrix& A, const Tolerance& tol = {});

/// ||A A* A - A||_F <= tol.abs
bool is_partial_isometry(const CMatrix& A, const Tolerance& tol = {});
/// ||A* A - I||_F <= tol.abs and ||A A* - I||_F <= tol.abs
bool is_unitary(const CMatrix& A, const Tolerance& tol = {});
/// ||P^2 - P||_F <= tol.abs and ||P - P*||_F <= tol.abs
bool is_projection(const CMatrix& P, const Tolerance& tol = {});
/// Pairwise P_i P_j ~ 0 (i != j) and sum P_i ~ I.
bool orthogonal_decomposition_check(std::span<const CMatrix> projections, const Tolerance& tol = {});

/// Index of the first pair (i, j), i < j, with ||P_i P_j||_F > tol.abs, or -1.
/// Used to report which summand breaks a decomposition.
int first_overlapping_projection(std::span<const CMatrix> projections, const Tolerance& tol = {});

}  // namespace hardy
