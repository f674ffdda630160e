#include "hardy/coprime.hpp"

#include <algorithm>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

int quotient_grid(const RationalMatFn& phi) { return std::max(phi.grid_log2(), min_grid_log2(phi.effective_degree() + 1)); }

double divisor_residual(const RationalMatFn& phi, const BPFactor& B, Side side) {
  const int g = quotient_grid(phi);
  const GridSamples inv = bp_inverse_samples(B, g);
  const GridSamples F = to_grid(phi, g);
  const GridSamples S = side == Side::left ? inv * F : F * inv;
  const SpectrumSplit sp = split_spectrum(S, phi.numerator().degree(), phi.den_zeros());
  return std::max(sp.negative, sp.tail);
}

CoprimeReport coprime_report(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta, Side side,
                             const Tolerance& tol) {
  theta.validate();
  CoprimeReport out{side, true, {}};
  for (cplx alpha : theta.distinct_zeros()) {
    const CMatrix v = eval(phi, alpha);
    // Left: complement of the range. Right: the kernel.
    const CMatrix& probe = side == Side::left ? v : v.adjoint();
    const CMatrix P = CMatrix::Identity(probe.rows(), probe.rows()) - significant_range_projection(probe, tol);
    const int defect = numerical_rank(P, tol);
    if (P.norm() <= tol.abs || defect == 0) continue;
    BPFactor B{alpha, P};
    const double res = divisor_residual(phi, B, side);
    out.witnesses.push_back({alpha, defect, std::move(B), res});
  }
  out.verdict = out.witnesses.empty();
  return out;
}

}  // namespace

CoprimeReport left_coprime_with_theta(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta,
                                      const Tolerance& tol) {
  return coprime_report(phi, theta, Side::left, tol);
}

CoprimeReport right_coprime_with_theta(const RationalMatFn& phi, const FiniteBlaschkeProduct& theta,
                                       const Tolerance& tol) {
  return coprime_report(phi, theta, Side::right, tol);
}

bool matrix_coprime_equivalence_check(const MatPoly& phi, const FiniteBlaschkeProduct& theta, const Tolerance& tol) {
  if (phi.rows() != phi.cols()) throw std::invalid_argument("matrix_coprime_equivalence_check: phi must be square");
  const RationalMatFn F(phi);
  const bool left = left_coprime_with_theta(F, theta, tol).verdict;
  const bool right = right_coprime_with_theta(F, theta, tol).verdict;
  bool invertible = true;
  for (cplx alpha : theta.distinct_zeros())
    invertible = invertible && numerical_rank(significant_range_projection(phi.eval(alpha), tol), tol) == phi.rows();
  if (left != invertible || right != invertible)
    throw CertificationFailure("matrix_coprime_equivalence_check: left, right and invertibility verdicts disagree",
                               static_cast<double>(left != invertible) + static_cast<double>(right != invertible));
  return invertible;
}

std::optional<CommonDefect> bp_common_defect(const RationalMatFn& phi, const RationalMatFn& psi,
                                             const Tolerance& tol) {
  if (phi.rows() != psi.rows()) throw std::invalid_argument("bp_coprime_check: row dimensions differ");
  FiniteBlaschkeProduct points{1.0, phi.den_zeros()};
  points.zeros.insert(points.zeros.end(), psi.den_zeros().begin(), psi.den_zeros().end());
  points.zeros.push_back(0.0);
  const Index E = phi.rows();
  for (cplx alpha : points.distinct_zeros()) {
    CMatrix joint(E, phi.cols() + psi.cols());
    joint << eval(phi, alpha), eval(psi, alpha);
    const int rank = numerical_rank(significant_range_projection(joint, tol), tol);
    if (rank < E) return CommonDefect{alpha, static_cast<int>(E) - rank};
  }
  return std::nullopt;
}

bool bp_coprime_check(const RationalMatFn& phi, const RationalMatFn& psi, const Tolerance& tol) {
  return !bp_common_defect(phi, psi, tol).has_value();
}

}  // namespace hardy
