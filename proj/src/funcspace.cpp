#include "hardy/funcspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "hardy/errors.hpp"

namespace hardy {

// ---------------------------------------------------------------- MatPoly

MatPoly::MatPoly(std::vector<CMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("MatPoly: empty coefficient list");
  for (const auto& c : coeffs_) {
    if (c.rows() != coeffs_.front().rows() || c.cols() != coeffs_.front().cols())
      throw std::invalid_argument("MatPoly: non-uniform coefficient shape");
  }
}

MatPoly MatPoly::constant(const CMatrix& c) { return MatPoly({c}); }

MatPoly MatPoly::identity(Index d) { return constant(CMatrix::Identity(d, d)); }

MatPoly MatPoly::monomial(Index d, int n) {
  std::vector<CMatrix> c(static_cast<std::size_t>(n + 1), CMatrix::Zero(d, d));
  c.back() = CMatrix::Identity(d, d);
  return MatPoly(std::move(c));
}

int MatPoly::degree() const {
  for (int n = size() - 1; n > 0; --n)
    if (coeffs_[static_cast<std::size_t>(n)].norm() > 0.0) return n;
  return 0;
}

CMatrix MatPoly::coeff(int n) const {
  if (n < 0 || n >= size()) return CMatrix::Zero(rows(), cols());
  return (*this)[n];
}

CMatrix MatPoly::eval(cplx z) const {
  CMatrix acc = coeffs_.back();
  for (int n = size() - 2; n >= 0; --n) acc = (acc * z).eval() + (*this)[n];
  return acc;
}

MatPoly MatPoly::trimmed(double eps) const {
  int last = size() - 1;
  while (last > 0 && (*this)[last].norm() <= eps) --last;
  return MatPoly(std::vector<CMatrix>(coeffs_.begin(), coeffs_.begin() + last + 1));
}

MatPoly MatPoly::padded(int n) const {
  std::vector<CMatrix> c = coeffs_;
  while (static_cast<int>(c.size()) < n) c.push_back(CMatrix::Zero(rows(), cols()));
  return MatPoly(std::move(c));
}

MatPoly MatPoly::adjoint_coeffs() const {
  std::vector<CMatrix> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(a.adjoint());
  return MatPoly(std::move(c));
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("MatPoly product: shape mismatch");
  std::vector<CMatrix> c(static_cast<std::size_t>(a.size() + b.size() - 1), CMatrix::Zero(a.rows(), b.cols()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return MatPoly(std::move(c));
}

MatPoly operator*(const MatPoly& a, const CMatrix& m) { return a * MatPoly::constant(m); }
MatPoly operator*(const CMatrix& m, const MatPoly& a) { return MatPoly::constant(m) * a; }

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("MatPoly sum: shape mismatch");
  const int n = std::max(a.size(), b.size());
  std::vector<CMatrix> c;
  for (int i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return MatPoly(std::move(c));
}

ScalarPoly poly_mul(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.empty() || b.empty()) return {};
  ScalarPoly c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ScalarPoly denominator_poly(const std::vector<cplx>& den_zeros) {
  ScalarPoly q{1.0};
  for (cplx a : den_zeros) q = poly_mul(q, {1.0, -std::conj(a)});
  return q;
}

MatPoly scale(const MatPoly& a, const ScalarPoly& p) {
  std::vector<CMatrix> c(static_cast<std::size_t>(a.size()) + p.size() - 1, CMatrix::Zero(a.rows(), a.cols()));
  for (int i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) c[static_cast<std::size_t>(i) + j] += a[i] * p[j];
  return MatPoly(std::move(c));
}

cplx blaschke_factor(cplx alpha, cplx z) { return (z - alpha) / (1.0 - std::conj(alpha) * z); }

cplx denominator_eval(const std::vector<cplx>& den_zeros, cplx z) {
  cplx q = 1.0;
  for (cplx a : den_zeros) q *= 1.0 - std::conj(a) * z;
  return q;
}

int min_grid_log2(int effective_degree) {
  const long need = 4L * (std::max(effective_degree, 0) + 1);
  int g = 2;
  while ((1L << g) < need) ++g;
  return g;
}

// ---------------------------------------------------------------- RationalMatFn

RationalMatFn::RationalMatFn(MatPoly numerator, std::vector<cplx> den_zeros, int grid_log2)
    : num_(std::move(numerator)), den_(std::move(den_zeros)) {
  if (num_.coeffs().empty()) throw std::invalid_argument("RationalMatFn: empty numerator");
  for (cplx a : den_) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("RationalMatFn: denominator zero outside the open disk");
  }
  if (grid_log2 < 0 || grid_log2 > 24) throw std::invalid_argument("RationalMatFn: grid_log2 out of range");
  grid_log2_ = std::max(grid_log2, min_grid_log2(effective_degree()));
}

// ---------------------------------------------------------------- grids

cplx grid_node(int k, int G) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(G));
}

GridSamples operator*(const GridSamples& a, const GridSamples& b) {
  if (a.size() != b.size()) throw std::invalid_argument("grid product: size mismatch");
  GridSamples out;
  out.values.reserve(a.values.size());
  for (int k = 0; k < a.size(); ++k) out.values.push_back(a[k] * b[k]);
  return out;
}

GridSamples adjoint(const GridSamples& s) {
  GridSamples out;
  out.values.reserve(s.values.size());
  for (const auto& v : s.values) out.values.push_back(v.adjoint());
  return out;
}

CMatrix eval(const RationalMatFn& F, cplx z) {
  if (std::abs(z) > 1.0 + 1e-12) throw std::invalid_argument("eval: |z| > 1");
  return F.numerator().eval(z) / denominator_eval(F.den_zeros(), z);
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_grid(const GridSamples& S) {
  if (!is_power_of_two(S.size())) throw std::invalid_argument("grid size must be a power of two");
  for (const auto& v : S.values) {
    if (v.rows() != S[0].rows() || v.cols() != S[0].cols())
      throw std::invalid_argument("grid samples: non-uniform shape");
  }
}

double max_norm(const std::vector<CMatrix>& bins, int lo, int hi) {
  double m = 0.0;
  for (int n = lo; n < hi; ++n) m = std::max(m, bins[static_cast<std::size_t>(n)].norm());
  return m;
}

GridSamples times_denominator(const GridSamples& S, const std::vector<cplx>& den) {
  if (den.empty()) return S;
  GridSamples out = S;
  for (int k = 0; k < S.size(); ++k) out[k] *= denominator_eval(den, grid_node(k, S.size()));
  return out;
}

}  // namespace

GridSamples to_grid(const RationalMatFn& F) { return to_grid(F, F.grid_log2()); }

GridSamples to_grid(const RationalMatFn& F, int grid_log2) {
  if (grid_log2 < F.grid_log2()) throw std::invalid_argument("to_grid: grid smaller than the function's grid");
  const int G = 1 << grid_log2;
  const MatPoly& N = F.numerator();
  const Index r = N.rows(), c = N.cols();
  GridSamples S;
  S.values.assign(static_cast<std::size_t>(G), CMatrix::Zero(r, c));
  Eigen::FFT<double> fft;
  std::vector<cplx> bins(static_cast<std::size_t>(G)), vals;
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) {
      std::fill(bins.begin(), bins.end(), cplx{});
      for (int n = 0; n < N.size(); ++n) bins[static_cast<std::size_t>(n % G)] += N[n](i, j);
      fft.inv(vals, bins);
      for (int k = 0; k < G; ++k) S[k](i, j) = vals[static_cast<std::size_t>(k)] * static_cast<double>(G);
    }
  }
  if (!F.den_zeros().empty()) {
    for (int k = 0; k < G; ++k) S[k] /= denominator_eval(F.den_zeros(), grid_node(k, G));
  }
  return S;
}

std::vector<CMatrix> grid_coefficients(const GridSamples& S) {
  check_grid(S);
  const int G = S.size();
  const Index r = S[0].rows(), c = S[0].cols();
  std::vector<CMatrix> out(static_cast<std::size_t>(G), CMatrix::Zero(r, c));
  Eigen::FFT<double> fft;
  std::vector<cplx> vals(static_cast<std::size_t>(G)), bins;
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) {
      for (int k = 0; k < G; ++k) vals[static_cast<std::size_t>(k)] = S[k](i, j);
      fft.fwd(bins, vals);
      for (int n = 0; n < G; ++n) out[static_cast<std::size_t>(n)](i, j) = bins[static_cast<std::size_t>(n)] / static_cast<double>(G);
    }
  }
  return out;
}

RationalMatFn from_grid(const GridSamples& S, int degree_bound, const std::vector<cplx>& den_zeros,
                        const Tolerance& tol) {
  check_grid(S);
  const int G = S.size();
  if (degree_bound < 0) throw std::invalid_argument("from_grid: negative degree bound");
  if (static_cast<long>(G) < 4L * (degree_bound + static_cast<long>(den_zeros.size()) + 1))
    throw std::invalid_argument("from_grid: grid too small for the degree bound");
  const auto bins = grid_coefficients(times_denominator(S, den_zeros));
  const double leak = max_norm(bins, degree_bound + 1, G);
  if (leak > tol.abs) throw CertificationFailure("from_grid: spectral content beyond the degree bound", leak);
  std::vector<CMatrix> coeffs(bins.begin(), bins.begin() + degree_bound + 1);
  return {MatPoly(std::move(coeffs)), den_zeros, std::countr_zero(static_cast<unsigned>(G))};
}

SpectrumSplit split_spectrum(const GridSamples& S, int degree_bound, const std::vector<cplx>& den_zeros) {
  check_grid(S);
  const int G = S.size();
  SpectrumSplit out;
  out.bins = grid_coefficients(times_denominator(S, den_zeros));
  out.negative = max_norm(out.bins, G / 2, G);
  out.tail = max_norm(out.bins, std::min(degree_bound + 1, G / 2), G / 2);
  return out;
}

MatPoly analytic_part_certify(const GridSamples& S, int degree_bound, const Tolerance& tol) {
  return analytic_part_certify(S, degree_bound, std::vector<cplx>{}, tol).numerator();
}

RationalMatFn analytic_part_certify(const GridSamples& S, int degree_bound, const std::vector<cplx>& den_zeros,
                                    const Tolerance& tol) {
  check_grid(S);
  const int G = S.size();
  if (degree_bound < 0) throw std::invalid_argument("analytic_part_certify: negative degree bound");
  if (static_cast<long>(G) < 4L * (degree_bound + static_cast<long>(den_zeros.size()) + 1))
    throw std::invalid_argument("analytic_part_certify: grid too small for the degree bound");
  SpectrumSplit sp = split_spectrum(S, degree_bound, den_zeros);
  if (sp.negative > tol.abs) throw NotAnalytic(sp.negative);
  if (sp.tail > tol.abs) throw CertificationFailure("analytic part exceeds the degree bound", sp.tail);
  std::vector<CMatrix> coeffs(sp.bins.begin(), sp.bins.begin() + degree_bound + 1);
  return {MatPoly(std::move(coeffs)), den_zeros, std::countr_zero(static_cast<unsigned>(G))};
}

RationalMatFn multiply(const RationalMatFn& F, const RationalMatFn& G, const Tolerance& tol) {
  if (F.cols() != G.rows()) throw std::invalid_argument("multiply: shape mismatch");
  std::vector<cplx> den = F.den_zeros();
  den.insert(den.end(), G.den_zeros().begin(), G.den_zeros().end());
  const int db = F.numerator().degree() + G.numerator().degree();
  const int g = std::max({F.grid_log2(), G.grid_log2(), min_grid_log2(db + static_cast<int>(den.size()))});
  return from_grid(to_grid(F, g) * to_grid(G, g), db, den, tol);
}

RationalMatFn tilde(const RationalMatFn& F) {
  std::vector<cplx> den;
  den.reserve(F.den_zeros().size());
  for (cplx a : F.den_zeros()) den.push_back(std::conj(a));
  return {F.numerator().adjoint_coeffs(), std::move(den), F.grid_log2()};
}

GridSamples adjoint_on_circle(const RationalMatFn& F) { return adjoint(to_grid(F)); }

MatPoly compose_blaschke(const RationalMatFn& F, cplx alpha, const Tolerance& tol) {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("compose_blaschke: |alpha| >= 1");
  const int N = std::max(F.numerator().degree(), static_cast<int>(F.den_zeros().size()));
  const int g = std::max(F.grid_log2(), min_grid_log2(N));
  const int G = 1 << g;
  GridSamples S;
  S.values.reserve(static_cast<std::size_t>(G));
  for (int k = 0; k < G; ++k) {
    const cplx w = grid_node(k, G);
    S.values.push_back(eval(F, (w + alpha) / (1.0 + std::conj(alpha) * w)));
  }
  return from_grid(S, N, {}, tol).numerator();
}

RationalMatFn shift_back(const MatPoly& A, cplx alpha) {
  if (alpha == cplx{}) return RationalMatFn(A);
  const int N = A.size() - 1;
  const ScalarPoly lin{-alpha, 1.0};
  const ScalarPoly co{1.0, -std::conj(alpha)};
  std::vector<CMatrix> acc(static_cast<std::size_t>(N + 1), CMatrix::Zero(A.rows(), A.cols()));
  for (int n = 0; n <= N; ++n) {
    ScalarPoly p{1.0};
    for (int i = 0; i < n; ++i) p = poly_mul(p, lin);
    for (int i = n; i < N; ++i) p = poly_mul(p, co);
    for (std::size_t j = 0; j < p.size(); ++j) acc[j] += A[n] * p[j];
  }
  return {MatPoly(std::move(acc)), std::vector<cplx>(static_cast<std::size_t>(N), alpha), 0};
}

MatPoly taylor_coefficients(const RationalMatFn& F, int count) {
  if (count <= 0) throw std::invalid_argument("taylor_coefficients: count must be positive");
  const ScalarPoly q = denominator_poly(F.den_zeros());
  ScalarPoly inv(static_cast<std::size_t>(count), 0.0);
  inv[0] = 1.0;
  for (int n = 1; n < count; ++n) {
    cplx s = 0.0;
    for (int k = 1; k <= std::min<int>(n, static_cast<int>(q.size()) - 1); ++k) s += q[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
    inv[static_cast<std::size_t>(n)] = -s;
  }
  std::vector<CMatrix> out(static_cast<std::size_t>(count), CMatrix::Zero(F.rows(), F.cols()));
  const MatPoly& N = F.numerator();
  for (int n = 0; n < count; ++n)
    for (int i = 0; i <= std::min(n, N.size() - 1); ++i) out[static_cast<std::size_t>(n)] += N[i] * inv[static_cast<std::size_t>(n - i)];
  return MatPoly(std::move(out));
}

namespace {

double residual_on_grid(const RationalMatFn& F, int g, bool two_sided) {
  const GridSamples S = to_grid(F, std::max(g, F.grid_log2()));
  const CMatrix Ic = CMatrix::Identity(F.cols(), F.cols());
  const CMatrix Ir = CMatrix::Identity(F.rows(), F.rows());
  double m = 0.0;
  for (const auto& v : S.values) {
    m = std::max(m, (v.adjoint() * v - Ic).norm());
    if (two_sided) m = std::max(m, (v * v.adjoint() - Ir).norm());
  }
  return m;
}

}  // namespace

double inner_residual(const RationalMatFn& F, int grid_log2) { return residual_on_grid(F, grid_log2, false); }

double two_sided_inner_residual(const RationalMatFn& F, int grid_log2) {
  return residual_on_grid(F, grid_log2, true);
}

bool is_inner(const RationalMatFn& F, const Tolerance& tol, bool recheck) {
  if (inner_residual(F) > tol.abs) return false;
  return !recheck || inner_residual(F, F.grid_log2() + 1) <= tol.abs;
}

bool is_two_sided_inner(const RationalMatFn& F, const Tolerance& tol, bool recheck) {
  if (F.rows() != F.cols()) return false;
  if (two_sided_inner_residual(F) > tol.abs) return false;
  return !recheck || two_sided_inner_residual(F, F.grid_log2() + 1) <= tol.abs;
}

double sup_distance(const RationalMatFn& F, const RationalMatFn& G) {
  if (F.rows() != G.rows() || F.cols() != G.cols()) throw std::invalid_argument("sup_distance: shape mismatch");
  const int g = std::max(F.grid_log2(), G.grid_log2());
  const GridSamples a = to_grid(F, g), b = to_grid(G, g);
  double m = 0.0;
  for (int k = 0; k < a.size(); ++k) m = std::max(m, (a[k] - b[k]).norm());
  return m;
}

std::optional<CMatrix> align_right_unitary(const RationalMatFn& F, const RationalMatFn& G, const Tolerance& tol) {
  if (F.rows() != G.rows()) return std::nullopt;
  const CMatrix U = eval(G, 1.0).adjoint() * eval(F, 1.0);
  if (U.rows() == U.cols() && !is_unitary(U, tol)) return std::nullopt;
  const RationalMatFn GU(G.numerator() * U, G.den_zeros(), G.grid_log2());
  if (sup_distance(F, GU) > tol.abs) return std::nullopt;
  return U;
}

}  // namespace hardy
