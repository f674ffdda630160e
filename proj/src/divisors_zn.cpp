#include "hardy/divisors_zn.hpp"

#include <stdexcept>

#include "hardy/errors.hpp"
#include "hardy/potapov.hpp"

namespace hardy {

namespace {

ZnDivisorCertificate coefficient_form(std::vector<CMatrix> coeffs, int N, const Tolerance& tol) {
  if (N < 0) throw std::invalid_argument("classify: N must be nonnegative");
  if (coeffs.empty() || coeffs.front().rows() != coeffs.front().cols())
    throw std::invalid_argument("classify: divisor must be square");
  const Index d = coeffs.front().rows();
  for (std::size_t n = static_cast<std::size_t>(N) + 1; n < coeffs.size(); ++n) {
    if (coeffs[n].norm() > tol.abs) throw NotADivisor("degree", static_cast<int>(n), "coefficient beyond N");
  }
  coeffs.resize(static_cast<std::size_t>(N) + 1, CMatrix::Zero(d, d));
  // Coefficients at noise level contribute the zero subspace.
  for (auto& c : coeffs)
    if (c.norm() <= tol.abs) c.setZero();

  ZnDivisorCertificate cert;
  cert.N = N;
  for (int n = 0; n <= N; ++n) {
    const CMatrix& a = coeffs[static_cast<std::size_t>(n)];
    if (!is_partial_isometry(a, tol)) throw NotADivisor("partial_isometry", n, "");
    if (!is_partial_isometry(a.adjoint(), tol)) throw NotADivisor("adjoint_partial_isometry", n, "");
    cert.subspace_projs.push_back(range_projection(a.adjoint(), tol));
    cert.range_projs.push_back(range_projection(a, tol));
  }
  if (!orthogonal_decomposition_check(cert.subspace_projs, tol))
    throw NotADivisor("domain_decomposition", first_overlapping_projection(cert.subspace_projs, tol), "");
  if (!orthogonal_decomposition_check(cert.range_projs, tol))
    throw NotADivisor("range_decomposition", first_overlapping_projection(cert.range_projs, tol), "");

  CMatrix V = CMatrix::Zero(d, d);
  for (int n = 0; n <= N; ++n) V += coeffs[static_cast<std::size_t>(n)] * cert.subspace_projs[static_cast<std::size_t>(n)];
  if (!is_unitary(V, tol)) throw NotADivisor("unitary", -1, "sum of coefficients is not unitary");

  cert.bp.unitary = V;
  CMatrix tailsum = CMatrix::Zero(d, d);
  std::vector<CMatrix> projs(static_cast<std::size_t>(N));
  for (int m = N; m >= 1; --m) {
    tailsum += cert.subspace_projs[static_cast<std::size_t>(m)];
    projs[static_cast<std::size_t>(m - 1)] = tailsum;
  }
  for (int m = 1; m <= N; ++m) cert.bp.factors.push_back({0.0, projs[static_cast<std::size_t>(m - 1)]});
  cert.coefficients = std::move(coeffs);

  cert.residual = sup_distance(expand(cert.bp), RationalMatFn(MatPoly(cert.coefficients)));
  if (cert.residual > tol.abs) throw NotADivisor("reconstruction", -1, "residual " + std::to_string(cert.residual));
  return cert;
}

/// Certificate via the peel with theta = z^N, for divisors outside coefficient form.
std::optional<ZnDivisorCertificate> peel_form(const std::vector<CMatrix>& coeffs, int N, const Tolerance& tol) {
  const RationalMatFn A{MatPoly(coeffs)};
  if (two_sided_inner_residual(A) > tol.abs) return std::nullopt;
  try {
    PeelResult peeled = potapov_peel(A, FiniteBlaschkeProduct{1.0, std::vector<cplx>(static_cast<std::size_t>(N), 0.0)}, tol);
    ZnDivisorCertificate cert;
    cert.N = N;
    cert.coefficient_form = false;
    cert.coefficients = coeffs;
    cert.coefficients.resize(static_cast<std::size_t>(N) + 1, CMatrix::Zero(A.rows(), A.cols()));
    cert.bp = std::move(peeled.product);
    cert.residual = sup_distance(expand(cert.bp), A);
    return cert;
  } catch (const NegativeVerdict&) {
    return std::nullopt;
  }
}

ZnDivisorCertificate classify_coefficients(const std::vector<CMatrix>& coeffs, int N, const Tolerance& tol) {
  try {
    return coefficient_form(coeffs, N, tol);
  } catch (const NotADivisor& e) {
    if (e.condition() == "degree") throw;
    if (auto cert = peel_form(coeffs, N, tol)) return *std::move(cert);
    throw;
  }
}

}  // namespace

ZnDivisorCertificate classify_zn(const MatPoly& A, int N, const Tolerance& tol) {
  return classify_coefficients(A.coeffs(), N, tol);
}

ZnDivisorCertificate classify_b_alpha_n(const RationalMatFn& A, cplx alpha, int N, const Tolerance& tol) {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("classify: |alpha| >= 1");
  const MatPoly shifted = compose_blaschke(A, alpha, tol);
  ZnDivisorCertificate cert = classify_coefficients(shifted.coeffs(), N, tol);
  cert.alpha = alpha;
  for (auto& f : cert.bp.factors) f.alpha = alpha;
  cert.residual = sup_distance(expand(cert.bp), A);
  if (cert.residual > tol.abs) throw NotADivisor("reconstruction", -1, "residual " + std::to_string(cert.residual));
  return cert;
}

std::optional<int> nontriviality_witness(const ZnDivisorCertificate& cert, const Tolerance& tol) {
  for (std::size_t n = 1; n < cert.coefficients.size(); ++n)
    if (cert.coefficients[n].norm() > tol.abs) return static_cast<int>(n);
  return std::nullopt;
}

}  // namespace hardy
