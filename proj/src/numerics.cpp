#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

struct Svd {
  CMatrix U;
  Eigen::VectorXd sigma;
  CMatrix V;
  int rank = 0;
};

Svd full_svd(const CMatrix& A, const Tolerance& tol) {
  Svd out;
  if (A.size() == 0) {
    out.U = CMatrix::Identity(A.rows(), A.rows());
    out.V = CMatrix::Identity(A.cols(), A.cols());
    return out;
  }
  Eigen::BDCSVD<CMatrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.U = svd.matrixU();
  out.V = svd.matrixV();
  out.sigma = svd.singularValues();
  const double smax = out.sigma.size() > 0 ? out.sigma(0) : 0.0;
  if (smax > 0.0) {
    const double cut = tol.rank_rel * smax;
    for (Index i = 0; i < out.sigma.size(); ++i) {
      if (out.sigma(i) > cut) ++out.rank;
    }
  }
  return out;
}

}  // namespace

void Tolerance::validate() const {
  if (!(abs > 0.0) || !std::isfinite(abs)) throw std::invalid_argument("tolerance: abs must be > 0");
  if (!(rank_rel > 0.0 && rank_rel < 1.0)) throw std::invalid_argument("tolerance: rank_rel must lie in (0, 1)");
}

double frobenius(const CMatrix& A) { return A.norm(); }

bool all_finite(const CMatrix& A) {
  for (Index j = 0; j < A.cols(); ++j)
    for (Index i = 0; i < A.rows(); ++i)
      if (!std::isfinite(A(i, j).real()) || !std::isfinite(A(i, j).imag())) return false;
  return true;
}

int numerical_rank(const CMatrix& A, const Tolerance& tol) {
  if (A.size() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(A);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tol.rank_rel * s(0);
  return static_cast<int>((s.array() > cut).count());
}

CMatrix range_basis(const CMatrix& A, const Tolerance& tol) {
  Svd s = full_svd(A, tol);
  return s.U.leftCols(s.rank);
}

CMatrix kernel_basis(const CMatrix& A, const Tolerance& tol) {
  Svd s = full_svd(A, tol);
  return s.V.rightCols(A.cols() - s.rank);
}

CMatrix range_projection(const CMatrix& A, const Tolerance& tol) {
  const CMatrix Q = range_basis(A, tol);
  return Q * Q.adjoint();
}

CMatrix significant_range_projection(const CMatrix& A, const Tolerance& tol) {
  Svd s = full_svd(A, tol);
  int r = 0;
  while (r < s.rank && s.sigma(r) > tol.abs) ++r;
  const CMatrix Q = s.U.leftCols(r);
  return Q * Q.adjoint();
}

CMatrix kernel_projection(const CMatrix& A, const Tolerance& tol) {
  const CMatrix Q = kernel_basis(A, tol);
  return Q * Q.adjoint();
}

bool is_partial_isometry(const CMatrix& A, const Tolerance& tol) {
  return frobenius(A * A.adjoint() * A - A) <= tol.abs;
}

bool is_unitary(const CMatrix& A, const Tolerance& tol) {
  if (A.rows() != A.cols()) return false;
  const CMatrix I = CMatrix::Identity(A.rows(), A.cols());
  return frobenius(A.adjoint() * A - I) <= tol.abs && frobenius(A * A.adjoint() - I) <= tol.abs;
}

bool is_projection(const CMatrix& P, const Tolerance& tol) {
  if (P.rows() != P.cols()) return false;
  return frobenius(P * P - P) <= tol.abs && frobenius(P - P.adjoint()) <= tol.abs;
}

int first_overlapping_projection(std::span<const CMatrix> Ps, const Tolerance& tol) {
  for (std::size_t i = 0; i < Ps.size(); ++i)
    for (std::size_t j = i + 1; j < Ps.size(); ++j)
      if (frobenius(Ps[i] * Ps[j]) > tol.abs) return static_cast<int>(j);
  return -1;
}

bool orthogonal_decomposition_check(std::span<const CMatrix> Ps, const Tolerance& tol) {
  if (Ps.empty()) return false;
  const Index d = Ps.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& P : Ps) {
    if (P.rows() != d || P.cols() != d) return false;
    sum += P;
  }
  if (first_overlapping_projection(Ps, tol) >= 0) return false;
  return frobenius(sum - CMatrix::Identity(d, d)) <= tol.abs;
}

}  // namespace hardy
