#include "hardy/hardy_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void check_truncation(int K) {
  if (K < 1 || K > 4096) throw std::invalid_argument("truncation K out of range");
}

/// Orthonormal kernel basis discarding singular values <= floor as well.
CMatrix floor_kernel_basis(const CMatrix& A, double floor, const Tolerance& tol) {
  if (A.rows() == 0) return CMatrix::Identity(A.cols(), A.cols());
  Eigen::BDCSVD<CMatrix> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = s.size() > 0 ? std::max(tol.rank_rel * s(0), floor) : floor;
  Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return svd.matrixV().rightCols(A.cols() - r);
}

/// Columns of U with singular value > threshold.
CMatrix range_above(const CMatrix& A, double threshold) {
  if (A.cols() == 0) return CMatrix(A.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(A, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) > threshold) ++r;
  return svd.matrixU().leftCols(r);
}

CMatrix orthonormalize(const CMatrix& B, const Tolerance& tol) {
  if (B.cols() == 0) return B;
  return range_basis(B, tol);
}

MatPoly columns_to_poly(const CMatrix& W, Index d, int K) {
  std::vector<CMatrix> c;
  for (int j = 0; j < K; ++j) c.push_back(W.middleRows(j * d, d));
  return MatPoly(std::move(c));
}

bool is_constant_unitary(const MatPoly& p, const Tolerance& tol) {
  if (p.rows() != p.cols()) return false;
  for (int n = 1; n < p.size(); ++n)
    if (p[n].norm() > tol.abs) return false;
  return is_unitary(p[0], tol);
}

/// Span of z^k N e_j inside P_K.
CMatrix shifted_columns(const MatPoly& N, int K) {
  const Index d = N.rows(), c = N.cols();
  const int deg = N.degree();
  const int shifts = std::max(0, K - deg);
  CMatrix S = CMatrix::Zero(d * K, c * shifts);
  for (int k = 0; k < shifts; ++k)
    for (int n = 0; n <= deg; ++n) S.block((k + n) * d, k * c, d, c) = N[n];
  return S;
}

/// Generator of cl(F H^2) inside P_K.
CMatrix module_basis(const RationalMatFn& F, int K, const Tolerance& tol) {
  if (F.rows() == F.cols() && two_sided_inner_residual(F) <= tol.abs) return hankel_kernel_basis(F, K, tol);
  return shifted_columns(F.numerator(), K);
}

}  // namespace

CMatrix hankel_of_adjoint(const RationalMatFn& phi, int K) {
  check_truncation(K);
  const Index E = phi.rows(), D = phi.cols();
  const MatPoly c = taylor_coefficients(phi, 2 * K);
  CMatrix H = CMatrix::Zero(D * K, E * K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) H.block(i * D, j * E, D, E) = c[i + j + 1].adjoint();
  return H;
}

CMatrix toeplitz_compress(const RationalMatFn& phi, int K) {
  check_truncation(K);
  const Index E = phi.rows(), D = phi.cols();
  const MatPoly c = taylor_coefficients(phi, K);
  CMatrix T = CMatrix::Zero(E * K, D * K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j <= i; ++j) T.block(i * E, j * D, E, D) = c[i - j];
  return T;
}

CMatrix toeplitz_of_adjoint(const RationalMatFn& phi, int K) {
  check_truncation(K);
  const Index E = phi.rows(), D = phi.cols();
  const MatPoly c = taylor_coefficients(phi, K);
  CMatrix T = CMatrix::Zero(D * K, E * K);
  for (int i = 0; i < K; ++i)
    for (int j = i; j < K; ++j) T.block(i * D, j * E, D, E) = c[j - i].adjoint();
  return T;
}

double rationality_defect(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta, int K) {
  check_truncation(K);
  theta.validate();
  const int dphi = phi.numerator().degree();
  const int dth = theta.degree();
  if (K < dphi + dth + 2) throw std::invalid_argument("rationality_test: K < deg phi + deg theta + 2");

  // Negative coefficients of phi^* theta decay like rho^n; pick a grid whose
  // aliasing into the first 2K negative bins is below double precision.
  double rho = 0.0;
  for (cplx a : phi.den_zeros()) rho = std::max(rho, std::abs(a));
  for (cplx b : theta.zeros) rho = std::max(rho, std::abs(b));
  long need = 4L * (2 * K + phi.effective_degree() + dth + 1);
  if (rho > 0.0) need = std::max(need, 2L * (2 * K + 8 + static_cast<long>(std::ceil(std::log(1e-18) / std::log(rho)))));
  int g = phi.grid_log2();
  while ((1L << g) < need && g < 16) ++g;
  const int G = 1 << g;

  GridSamples S = adjoint(to_grid(phi, g));
  for (int k = 0; k < G; ++k) S[k] *= theta.eval(grid_node(k, G));
  const auto bins = grid_coefficients(S);
  auto neg = [&](int m) -> const CMatrix& { return bins[static_cast<std::size_t>(G - m)]; };

  const Index E = phi.rows();
  double worst = 0.0;
  for (int k = 0; k + dth < K - dphi; ++k) {
    for (Index j = 0; j < E; ++j) {
      double sq = 0.0;
      for (int i = 0; i < K; ++i) sq += neg(1 + i + k).col(j).squaredNorm();
      worst = std::max(worst, std::sqrt(sq));
    }
  }
  return worst;
}

bool rationality_test(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta, int K, const Tolerance& tol) {
  return rationality_defect(phi, theta, K) <= tol.abs;
}

CMatrix hankel_kernel_basis(const RationalMatFn& phi, int K, const Tolerance& tol) {
  return kernel_basis(hankel_of_adjoint(phi, K), tol);
}

BlhExtraction blh_extract(const CMatrix& basis, Index d, int K, const Tolerance& tol) {
  check_truncation(K);
  if (basis.rows() != d * K) throw std::invalid_argument("blh_extract: basis rows must equal d*K");
  const CMatrix Q = orthonormalize(basis, tol);
  const Index k = Q.cols();
  BlhExtraction out{MatPoly({CMatrix(d, 0)}), static_cast<int>(k), 0, 0.0, 0.0};
  if (k == 0) return out;

  // Part of the subspace with vanishing top coefficient, multiplied by z.
  const CMatrix Y = floor_kernel_basis(Q.bottomRows(d), tol.abs, tol);
  const CMatrix low = Q * Y;
  CMatrix Z = CMatrix::Zero(d * K, low.cols());
  if (K > 1) Z.bottomRows(d * (K - 1)) = low.topRows(d * (K - 1));
  out.shift_leak = (Z - Q * (Q.adjoint() * Z)).norm();
  const double allowed = tol.abs * std::max(1.0, std::sqrt(static_cast<double>(Z.cols())));
  if (out.shift_leak > allowed) throw NotShiftInvariant("blh_extract: subspace is not shift invariant", out.shift_leak);

  const CMatrix W = range_above(Q - Z * (Z.adjoint() * Q), 0.5);
  out.wandering_dim = static_cast<int>(W.cols());
  out.inner = columns_to_poly(W, d, K).trimmed(1e-3 * tol.abs);
  out.inner_residual = W.cols() == 0 ? 0.0 : inner_residual(RationalMatFn(out.inner));
  if (out.inner_residual > tol.abs)
    throw CertificationFailure("blh_extract: wandering subspace does not give an inner function", out.inner_residual);
  return out;
}

BlhExtraction blh_extract_stable(const std::function<CMatrix(int)>& basis_at, Index d, int K, const Tolerance& tol) {
  const CMatrix B1 = basis_at(K);
  const CMatrix B2 = basis_at(K + 2);
  BlhExtraction a = blh_extract(B1, d, K, tol);
  const BlhExtraction b = blh_extract(B2, d, K + 2, tol);
  if (a.wandering_dim != b.wandering_dim) throw TruncationTooSmall(K, a.wandering_dim, b.wandering_dim);
  // Theta H^2 with Theta of width r meets P_K in co-dimension (d - r) K + deg Theta.
  const int codim1 = static_cast<int>(d * K) - a.subspace_dim;
  const int codim2 = static_cast<int>(d * (K + 2)) - b.subspace_dim;
  const int growth = 2 * (static_cast<int>(d) - a.wandering_dim);
  if (codim2 - codim1 != growth) throw TruncationTooSmall(K, codim1, codim2 - growth);
  return a;
}

MatPoly left_gcd(const RationalMatFn& phi, const RationalMatFn& psi, int K, const Tolerance& tol) {
  if (phi.rows() != psi.rows()) throw std::invalid_argument("left_gcd: row dimensions differ");
  const Index d = phi.rows();
  const int Keff = std::max({K, 2 * phi.effective_degree() + 2, 2 * psi.effective_degree() + 2});
  auto basis_at = [&](int k) {
    const CMatrix a = module_basis(phi, k, tol);
    const CMatrix b = module_basis(psi, k, tol);
    CMatrix S(d * k, a.cols() + b.cols());
    S << a, b;
    return S;
  };
  return blh_extract_stable(basis_at, d, Keff, tol).inner;
}

MatPoly complementary_factor(const RationalMatFn& omega, int K, const Tolerance& tol) {
  const Index E = omega.rows();
  const int Keff = std::max(K, 2 * omega.effective_degree() + 2);
  // ker H_{omega^*} and ker T_{omega^*} together: omega^* f = 0 on the circle,
  // i.e. z^n N(1/conj z)^* f(z) vanishes identically for n = deg N.
  const MatPoly& N = omega.numerator();
  const int n = N.degree();
  const Index D = omega.cols();
  auto basis_at = [&](int k) {
    CMatrix A = CMatrix::Zero(D * (k + n), E * k);
    for (int j = 0; j < k; ++j)
      for (int m = 0; m <= n; ++m) A.block((j + m) * D, j * E, D, E) = N[n - m].adjoint();
    return kernel_basis(A, tol);
  };
  if (basis_at(Keff).cols() == 0) return MatPoly({CMatrix(E, 0)});
  return blh_extract_stable(basis_at, E, Keff, tol).inner;
}

MatPoly common_right_divisor(const RationalMatFn& phi, const RationalMatFn& psi, int K, const Tolerance& tol) {
  if (phi.cols() != psi.cols()) throw std::invalid_argument("common_right_divisor: column dimensions differ");
  const MatPoly omega = left_gcd(tilde(phi), tilde(psi), K, tol);
  if (omega.cols() == 0 || is_constant_unitary(omega, tol))
    throw TrivialGcd("common_right_divisor: the inputs have no common nontrivial right inner divisor");

  const int Kc = std::max(K, 2 * omega.degree() + 2);
  const MatPoly comp = complementary_factor(RationalMatFn(omega), Kc, tol);
  const int n = std::max(omega.size(), comp.size());
  std::vector<CMatrix> joined;
  for (int j = 0; j < n; ++j) {
    CMatrix c(omega.rows(), omega.cols() + comp.cols());
    c << omega.coeff(j), comp.coeff(j);
    joined.push_back(c);
  }
  const MatPoly R = MatPoly(std::move(joined)).adjoint_coeffs();

  for (const RationalMatFn* F : {&phi, &psi}) {
    const int db = F->numerator().degree();
    const int g = std::max(F->grid_log2(), min_grid_log2(db + static_cast<int>(F->den_zeros().size()) + R.degree()));
    const GridSamples S = to_grid(*F, g) * adjoint(to_grid(RationalMatFn(R), g));
    try {
      analytic_part_certify(S, db, F->den_zeros(), tol);
    } catch (const NotAnalytic& e) {
      throw CertificationFailure("common_right_divisor: divisor does not right-divide an input", e.max_negative_norm());
    }
  }
  return R;
}

}  // namespace hardy
