#pragma once

#include <functional>

#include "hardy/blaschke.hpp"

namespace hardy {

// Vectors in the truncated Hardy space P_K (polynomials of degree < K with
// values in C^d) are stored block-wise: entries j*d .. j*d+d-1 hold the
// coefficient of z^j.

/// Block (i, j) = coefficient of phi at i + j + 1, adjointed; shape (cols*K) x (rows*K).
CMatrix hankel_of_adjoint(const RationalMatFn& phi, int K);
/// Block (i, j) = coefficient of phi at i - j; shape (rows*K) x (cols*K).
CMatrix toeplitz_compress(const RationalMatFn& phi, int K);
/// Block (i, j) = coefficient of phi at j - i, adjointed; shape (cols*K) x (rows*K).
CMatrix toeplitz_of_adjoint(const RationalMatFn& phi, int K);

/// Largest norm of H_{phi^*} (theta z^k e_j) over k + deg theta < K - deg phi,
/// computed from the negative Fourier coefficients of phi^* theta.
/// Requires K >= deg phi + deg theta + 2, where deg phi counts denominator zeros.
double rationality_defect(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta, int K);
bool rationality_test(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta, int K, const Tolerance& tol = {});

/// Orthonormal basis (columns) of the numerical kernel of hankel_of_adjoint(phi, K).
CMatrix hankel_kernel_basis(const RationalMatFn& phi, int K, const Tolerance& tol = {});

struct BlhExtraction {
  MatPoly inner;     ///< d x r, columns span the wandering subspace
  int subspace_dim;  ///< dimension of the input subspace
  int wandering_dim;
  double shift_leak;
  double inner_residual;
};

/// Inner function generating the shift-invariant subspace spanned by `basis`
/// (d*K rows). Throws NotShiftInvariant when shifting the part of degree
/// < K-1 leaves the span, and CertificationFailure when the result is not inner.
BlhExtraction blh_extract(const CMatrix& basis, Index d, int K, const Tolerance& tol = {});

/// blh_extract at K, rerun at K + 2. The wandering dimension r must agree and
/// the co-dimension must grow by exactly 2 (d - r) (TruncationTooSmall otherwise).
BlhExtraction blh_extract_stable(const std::function<CMatrix(int)>& basis_at, Index d, int K,
                                 const Tolerance& tol = {});

/// Greatest common left inner divisor: the inner function of cl(phi H^2 + psi H^2).
MatPoly left_gcd(const RationalMatFn& phi, const RationalMatFn& psi, int K, const Tolerance& tol = {});

/// Inner omega_c with ker H_{omega^*} = [omega, omega_c] H^2; may have zero columns.
MatPoly complementary_factor(const RationalMatFn& omega, int K, const Tolerance& tol = {});

/// tilde([omega, omega_c]) for omega = left_gcd(tilde phi, tilde psi), verified
/// to right-divide both inputs. Throws TrivialGcd when omega is a constant unitary.
MatPoly common_right_divisor(const RationalMatFn& phi, const RationalMatFn& psi, int K, const Tolerance& tol = {});

}  // namespace hardy
