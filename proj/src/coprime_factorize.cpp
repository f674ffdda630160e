#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/coprime.hpp"
#include "hardy/errors.hpp"
#include "hardy/hardy_ops.hpp"
#include "hardy/potapov.hpp"

namespace hardy {

namespace {

/// Smallest K whose truncated Taylor tail rho^K falls below 1e-3 tol.abs.
int adaptive_truncation(const RationalMatFn& phi, int K, const Tolerance& tol) {
  int out = std::max(K, 2 * phi.effective_degree() + 2);
  double rho = 0.0;
  for (cplx a : phi.den_zeros()) rho = std::max(rho, std::abs(a));
  if (rho > 0.0) out = std::max(out, static_cast<int>(std::ceil(std::log(1e-3 * tol.abs) / std::log(rho))) + 2);
  const int cap = static_cast<int>(4094 / std::max<Index>(phi.rows(), 1));
  return std::min(out, cap);
}

}  // namespace

CoprimeFactorization coprime_factorize(const RationalMatFn& phi, int K, const Tolerance& tol) {
  tol.validate();
  const Index E = phi.rows();
  const int Keff = adaptive_truncation(phi, K, tol);
  const BlhExtraction blh =
      blh_extract_stable([&](int k) { return hankel_kernel_basis(phi, k, tol); }, E, Keff, tol);
  if (blh.wandering_dim != E)
    throw CertificationFailure("coprime_factorize: Hankel kernel is not of full rank",
                               static_cast<double>(E - blh.wandering_dim));

  // The truncated BLH generator approximates a divisor of theta0 I.
  const FiniteBlaschkeProduct theta0 = denominator_theta(phi);
  const int M = theta0.degree();
  const RationalMatFn trunc(blh.inner, {}, 0);
  const int gd = std::max(trunc.grid_log2(), min_grid_log2(M + static_cast<int>(phi.den_zeros().size()) + 1));
  const RationalMatFn delta_raw = from_grid(to_grid(trunc, gd), M, phi.den_zeros(), tol);
  const PeelResult peeled = potapov_peel(delta_raw, theta0, tol);

  CoprimeFactorization out;
  out.delta = peeled.product;
  out.delta_fn = expand(out.delta);
  out.truncation = Keff;

  // A = phi^* delta, analytic with the denominator of delta.
  const int db = M + phi.numerator().degree();
  const int g = std::max({phi.grid_log2(), out.delta_fn.grid_log2(),
                          min_grid_log2(db + static_cast<int>(out.delta_fn.den_zeros().size()) + 1)});
  const GridSamples F = to_grid(phi, g);
  const GridSamples D = to_grid(out.delta_fn, g);
  out.a = from_grid(adjoint(F) * D, db, out.delta_fn.den_zeros(), tol);
  out.a = RationalMatFn(out.a.numerator().trimmed(1e-3 * tol.abs), out.a.den_zeros(), 0);

  const GridSamples back = D * adjoint(to_grid(out.a, g));
  double res = 0.0;
  for (int k = 0; k < back.size(); ++k) res = std::max(res, (back[k] - F[k]).norm());
  out.residual = res;
  if (res > tol.abs) throw ResidualFailure("coprime_factorize: delta a^* does not reproduce phi", res);

  if (const auto defect = bp_common_defect(tilde(out.delta_fn), tilde(out.a), tol))
    throw CoprimeCheckFailed("coprime_factorize: delta and a share a Blaschke-Potapov factor at alpha = (" +
                                 std::to_string(defect->alpha.real()) + ", " + std::to_string(defect->alpha.imag()) +
                                 "), common kernel dimension " + std::to_string(defect->dimension),
                             static_cast<double>(defect->dimension));
  return out;
}

}  // namespace hardy
