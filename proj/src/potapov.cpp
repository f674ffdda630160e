#include "hardy/potapov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kSameZero = 1e-12;

GridSamples theta_times_adjoint(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta, int g) {
  GridSamples S = adjoint(to_grid(delta, g));
  for (int k = 0; k < S.size(); ++k) S[k] *= theta.eval(grid_node(k, S.size()));
  return S;
}

int omega_grid(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta) {
  const int M = theta.degree();
  return std::max(delta.grid_log2(), min_grid_log2(std::max(2 * M, M + delta.effective_degree())));
}

/// theta delta^* as N / q_theta; throws NotAnalytic / CertificationFailure.
RationalMatFn quotient(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta, const Tolerance& tol) {
  const int g = omega_grid(delta, theta);
  return analytic_part_certify(theta_times_adjoint(delta, theta, g), theta.degree(), theta.zeros, tol);
}

/// Divides M by (z - alpha) from the top; returns quotient and remainder norm.
std::pair<std::vector<CMatrix>, double> divide_linear(const MatPoly& M, cplx alpha) {
  const int D = M.size() - 1;
  if (D == 0) return {{CMatrix::Zero(M.rows(), M.cols())}, M[0].norm()};
  std::vector<CMatrix> Q(static_cast<std::size_t>(D));
  Q[static_cast<std::size_t>(D - 1)] = M[D];
  for (int k = D - 1; k >= 1; --k) Q[static_cast<std::size_t>(k - 1)] = M[k] + alpha * Q[static_cast<std::size_t>(k)];
  const double rem = (M[0] + alpha * Q[0]).norm();
  return {std::move(Q), rem};
}

/// Divides Q by (1 - conj(alpha) z) from the bottom, if the remainder is within eps.
std::optional<std::vector<CMatrix>> divide_denominator(const std::vector<CMatrix>& Q, cplx alpha, double eps) {
  const std::size_t D = Q.size();
  if (D < 2) return std::nullopt;
  const cplx ab = std::conj(alpha);
  std::vector<CMatrix> R(D - 1);
  R[0] = Q[0];
  for (std::size_t k = 1; k + 1 < D; ++k) R[k] = Q[k] + ab * R[k - 1];
  if ((Q[D - 1] + ab * R[D - 2]).norm() > eps) return std::nullopt;
  return R;
}

}  // namespace

PeelStepResult peel_step(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta, cplx alpha,
                         const Tolerance& tol) {
  auto pos = std::find_if(theta.zeros.begin(), theta.zeros.end(),
                          [&](cplx b) { return std::abs(b - alpha) <= kSameZero; });
  if (pos == theta.zeros.end()) throw std::invalid_argument("peel_step: alpha is not a zero of theta");
  if (delta.rows() != delta.cols()) throw NotInner("peel_step: divisor is not square", 0.0);

  const RationalMatFn omega = quotient(delta, theta, tol);
  const CMatrix P = significant_range_projection(eval(omega, alpha), tol);
  const Index d = delta.rows();
  const CMatrix I = CMatrix::Identity(d, d);

  // delta (b_alpha P + I - P)^{-1} = N(z) [P (1 - conj(alpha) z) + (z - alpha)(I - P)] / ((z - alpha) q(z))
  const MatPoly L({P - alpha * (I - P), -std::conj(alpha) * P + (I - P)});
  auto [Q, rem] = divide_linear(delta.numerator() * L, alpha);
  if (rem > tol.abs) throw DivisionResidual("peel_step: numerator not divisible by (z - alpha)", rem);

  std::vector<cplx> den = delta.den_zeros();
  auto dpos = std::find_if(den.begin(), den.end(), [&](cplx b) { return std::abs(b - alpha) <= kSameZero; });
  if (dpos != den.end()) {
    if (alpha == cplx{}) {
      den.erase(dpos);
    } else if (auto R = divide_denominator(Q, alpha, tol.abs)) {
      Q = std::move(*R);
      den.erase(dpos);
    }
  }

  PeelStepResult out;
  out.factor = {alpha, P};
  out.next = RationalMatFn(MatPoly(std::move(Q)), std::move(den), 0);
  out.theta_next = theta;
  out.theta_next.zeros.erase(out.theta_next.zeros.begin() + (pos - theta.zeros.begin()));
  out.division_residual = rem;
  out.inner_residual = two_sided_inner_residual(out.next);
  return out;
}

PeelResult potapov_peel(const RationalMatFn& delta, const FiniteBlaschkeProduct& theta, const Tolerance& tol) {
  theta.validate();
  if (delta.rows() != delta.cols()) throw NotInner("potapov_peel: divisor is not square", 0.0);
  const double inner_res = two_sided_inner_residual(delta);
  if (inner_res > tol.abs) throw NotInner("potapov_peel: divisor is not two-sided inner", inner_res);

  RationalMatFn omega0;
  try {
    omega0 = quotient(delta, theta, tol);
  } catch (const NotAnalytic& e) {
    throw NotADivisor("divides_theta", -1, e.what());
  } catch (const CertificationFailure& e) {
    throw NotADivisor("divides_theta", -1, e.what());
  }

  const int M = theta.degree();
  PeelResult out;
  std::vector<BPFactor> factors(static_cast<std::size_t>(M));
  RationalMatFn cur = delta;
  FiniteBlaschkeProduct th = theta;
  for (int n = M - 1; n >= 0; --n) {
    const cplx alpha = theta.zeros[static_cast<std::size_t>(n)];
    PeelStepResult step = peel_step(cur, th, alpha, tol);
    const CMatrix P_static = significant_range_projection(eval(omega0, alpha), tol);
    out.trace.steps.push_back(
        {alpha, step.factor.proj, step.division_residual, step.inner_residual, (P_static - step.factor.proj).norm()});
    factors[static_cast<std::size_t>(n)] = step.factor;
    cur = std::move(step.next);
    th = std::move(step.theta_next);
  }

  const CMatrix V = eval(cur, 0.0);
  const double flat = sup_distance(cur, RationalMatFn(MatPoly::constant(V)));
  if (flat > tol.abs) throw ResidualFailure("potapov_peel: final quotient is not constant", flat);
  if (!is_unitary(V, tol)) throw ResidualFailure("potapov_peel: final constant is not unitary", (V.adjoint() * V - CMatrix::Identity(V.rows(), V.cols())).norm());
  out.trace.final_unitary = V;
  out.product = canonicalize(BPProduct{V, std::move(factors)}, tol);
  const double res = sup_distance(expand(out.product), delta);
  if (res > tol.abs) throw ResidualFailure("potapov_peel: product does not reproduce the divisor", res);
  return out;
}

FiniteBlaschkeProduct denominator_theta(const RationalMatFn& phi) {
  FiniteBlaschkeProduct theta{1.0, phi.den_zeros()};
  const int extra = phi.numerator().degree() - static_cast<int>(phi.den_zeros().size());
  for (int i = 0; i < extra; ++i) theta.zeros.push_back(0.0);
  return theta;
}

BPProduct inner_rational_to_bp(const RationalMatFn& phi, const Tolerance& tol) {
  if (phi.rows() != phi.cols()) throw NotInner("inner_rational_to_bp: function is not square", 0.0);
  const double inner_res = two_sided_inner_residual(phi);
  if (inner_res > tol.abs) throw NotInner("inner_rational_to_bp: function is not two-sided inner", inner_res);

  const int budget = phi.numerator().degree() + static_cast<int>(phi.den_zeros().size());
  std::vector<cplx> candidates = FiniteBlaschkeProduct{1.0, phi.den_zeros()}.distinct_zeros();
  if (std::none_of(candidates.begin(), candidates.end(), [](cplx c) { return c == cplx{}; }))
    candidates.push_back(0.0);

  auto spectrum = [&](const FiniteBlaschkeProduct& th) {
    const int g = omega_grid(phi, th);
    return split_spectrum(theta_times_adjoint(phi, th, g), th.degree(), th.zeros);
  };

  FiniteBlaschkeProduct theta{1.0, phi.den_zeros()};
  for (;;) {
    const SpectrumSplit sp = spectrum(theta);
    if (sp.negative <= tol.abs && sp.tail <= tol.abs) break;
    if (theta.degree() >= budget)
      throw NotRational("inner_rational_to_bp: no Blaschke product within the degree budget " +
                        std::to_string(budget) + " makes theta phi^* analytic");
    double best = std::numeric_limits<double>::infinity();
    cplx pick = candidates.front();
    for (cplx c : candidates) {
      FiniteBlaschkeProduct trial = theta;
      trial.zeros.push_back(c);
      const SpectrumSplit t = spectrum(trial);
      const double score = std::max(t.negative, t.tail);
      if (score < best) {
        best = score;
        pick = c;
      }
    }
    theta.zeros.push_back(pick);
  }
  return potapov_peel(phi, theta, tol).product;
}

}  // namespace hardy
