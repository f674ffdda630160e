#pragma once

#include <optional>
#include <vector>

#include "hardy/blaschke.hpp"

namespace hardy {

/// Evidence that A is an inner divisor of b_alpha^N I (alpha = 0 for z^N I).
///
/// `coefficients` are the coefficients of A in powers of b_alpha, padded to
/// N + 1 entries. In coefficient form bp keeps all N factors, including
/// rank-0 ones, so that bp.factors[m-1].proj = sum_{n >= m} subspace_projs[n].
///
/// For N >= 2 the coefficient test is sufficient but not necessary: a product
/// of factors with non-nested projections divides z^N I while its
/// coefficients need not be partial isometries. Such inputs are certified
/// through the peel instead; `coefficient_form` is then false and the
/// projection lists are empty.
struct ZnDivisorCertificate {
  int N = 0;
  cplx alpha{};
  bool coefficient_form = true;
  std::vector<CMatrix> coefficients;
  std::vector<CMatrix> subspace_projs;  ///< onto ran A_n^*
  std::vector<CMatrix> range_projs;     ///< onto ran A_n
  BPProduct bp;
  double residual = 0.0;  ///< sup-grid distance between bp and A
};

/// Throws NotADivisor naming the failed condition ("degree",
/// "partial_isometry", "adjoint_partial_isometry", "domain_decomposition",
/// "range_decomposition", "unitary", "reconstruction") and the index.
ZnDivisorCertificate classify_zn(const MatPoly& A, int N, const Tolerance& tol = {});

/// Same, after rewriting A as a polynomial in b_alpha. Propagates
/// CertificationFailure when A has no such expansion.
ZnDivisorCertificate classify_b_alpha_n(const RationalMatFn& A, cplx alpha, int N, const Tolerance& tol = {});

/// Smallest n >= 1 whose coefficient exceeds tol.abs; none for a constant unitary.
std::optional<int> nontriviality_witness(const ZnDivisorCertificate& cert, const Tolerance& tol = {});

}  // namespace hardy
