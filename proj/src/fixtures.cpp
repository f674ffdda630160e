#include "hardy/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardy::fixtures {

CMatrix random_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix M(rows, cols);
  for (Index i = 0; i < M.size(); ++i) M.data()[i] = cplx(g(rng), g(rng));
  return M;
}

CMatrix random_unitary(Index d, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_matrix(d, d, rng));
  CMatrix Q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const double m = std::abs(R(j, j));
    if (m > 0.0) Q.col(j) *= R(j, j) / m;
  }
  return Q;
}

CMatrix random_projection(Index d, Index rank, Rng& rng) {
  const CMatrix Q = random_unitary(d, rng).leftCols(rank);
  return Q * Q.adjoint();
}

cplx random_disk_point(double radius, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

MatPoly random_matpoly(Index rows, Index cols, int degree, Rng& rng) {
  std::vector<CMatrix> c;
  for (int n = 0; n <= degree; ++n) c.push_back(random_matrix(rows, cols, rng));
  return MatPoly(std::move(c));
}

BPProduct random_bp_product(const BPSpec& spec, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<Index> rank(1, spec.dim);
  BPProduct B{random_unitary(spec.dim, rng), {}};
  for (int m = 0; m < spec.factors; ++m) {
    cplx a = random_disk_point(spec.max_radius, rng);
    if (m > 0 && u(rng) < spec.repeat_probability) a = B.factors.back().alpha;
    B.factors.push_back({a, random_projection(spec.dim, rank(rng), rng)});
  }
  return B;
}

BPProduct scalar_bp(const FiniteBlaschkeProduct& theta, Index d) {
  BPProduct B{theta.unimodular * CMatrix::Identity(d, d), {}};
  for (cplx a : theta.zeros) B.factors.push_back({a, CMatrix::Identity(d, d)});
  return B;
}

RationalMatFn analytic_projection(const RationalMatFn& delta, const MatPoly& a) {
  const int m = a.degree();
  const MatPoly t = taylor_coefficients(delta, m + 1);
  // Negative Fourier coefficients of delta a^*: c_{-j} = sum_{k >= j} delta_{k-j} a_k^*.
  std::vector<CMatrix> neg(static_cast<std::size_t>(m + 1));
  for (int j = 1; j <= m; ++j) {
    CMatrix c = CMatrix::Zero(delta.rows(), a.rows());
    for (int k = j; k <= m; ++k) c += t[k - j] * a[k].adjoint();
    neg[static_cast<std::size_t>(j)] = c;
  }
  const int db = std::max(delta.numerator().degree(), static_cast<int>(delta.den_zeros().size()));
  const int g = std::max({delta.grid_log2(), min_grid_log2(db + static_cast<int>(delta.den_zeros().size()) + m),
                          min_grid_log2(2 * m)});
  const GridSamples D = to_grid(delta, g);
  const GridSamples A = to_grid(RationalMatFn(a), g);
  GridSamples S = D * adjoint(A);
  for (int k = 0; k < S.size(); ++k) {
    const cplx zbar = std::conj(grid_node(k, S.size()));
    cplx p = 1.0;
    for (int j = 1; j <= m; ++j) {
      p *= zbar;
      S[k] -= p * neg[static_cast<std::size_t>(j)];
    }
  }
  return from_grid(S, db, delta.den_zeros(), Tolerance{1e-9, 1e-9});
}

}  // namespace hardy::fixtures
