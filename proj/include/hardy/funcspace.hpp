#pragma once

#include <optional>
#include <vector>

#include "hardy/numerics.hpp"

namespace hardy {

/// Matrix polynomial sum_n coeffs[n] z^n with uniform coefficient shape.
class MatPoly {
 public:
  MatPoly() = default;
  explicit MatPoly(std::vector<CMatrix> coeffs);

  static MatPoly constant(const CMatrix& c);
  static MatPoly identity(Index d);
  /// z^n * I_d
  static MatPoly monomial(Index d, int n);

  Index rows() const { return coeffs_.front().rows(); }
  Index cols() const { return coeffs_.front().cols(); }
  /// Number of stored coefficients (degree bound + 1).
  int size() const { return static_cast<int>(coeffs_.size()); }
  /// Largest n with a nonzero coefficient; 0 for the zero polynomial.
  int degree() const;

  const CMatrix& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  CMatrix& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  /// Coefficient n, or zero when n is out of range.
  CMatrix coeff(int n) const;
  const std::vector<CMatrix>& coeffs() const { return coeffs_; }

  CMatrix eval(cplx z) const;
  /// Drop trailing coefficients with Frobenius norm <= eps (keeps at least one).
  MatPoly trimmed(double eps = 0.0) const;
  /// Pad with zero coefficients up to `n` stored coefficients.
  MatPoly padded(int n) const;
  MatPoly adjoint_coeffs() const;

 private:
  std::vector<CMatrix> coeffs_;
};

MatPoly operator*(const MatPoly& a, const MatPoly& b);
MatPoly operator*(const MatPoly& a, const CMatrix& c);
MatPoly operator*(const CMatrix& c, const MatPoly& a);
MatPoly operator+(const MatPoly& a, const MatPoly& b);

/// Scalar polynomial helpers (coefficients in increasing degree).
using ScalarPoly = std::vector<cplx>;
ScalarPoly poly_mul(const ScalarPoly& a, const ScalarPoly& b);
/// prod_k (1 - conj(alpha_k) z)
ScalarPoly denominator_poly(const std::vector<cplx>& den_zeros);
MatPoly scale(const MatPoly& a, const ScalarPoly& p);

/// b_alpha(z) = (z - alpha) / (1 - conj(alpha) z)
cplx blaschke_factor(cplx alpha, cplx z);
/// prod_k (1 - conj(alpha_k) z)
cplx denominator_eval(const std::vector<cplx>& den_zeros, cplx z);

/// Smallest g >= 2 with 2^g >= 4 (effective_degree + 1).
int min_grid_log2(int effective_degree);

/// N(z) / prod_k (1 - conj(alpha_k) z), sampled on 2^g roots of unity.
///
/// `grid_log2` is a lower bound: the effective grid always satisfies
/// G >= 4 (deg N + #den + 1).
class RationalMatFn {
 public:
  RationalMatFn() = default;
  RationalMatFn(MatPoly numerator, std::vector<cplx> den_zeros, int grid_log2 = 0);
  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalMatFn(const MatPoly& p) : RationalMatFn(p, {}, 0) {}

  const MatPoly& numerator() const { return num_; }
  const std::vector<cplx>& den_zeros() const { return den_; }
  int grid_log2() const { return grid_log2_; }
  int grid_size() const { return 1 << grid_log2_; }
  Index rows() const { return num_.rows(); }
  Index cols() const { return num_.cols(); }
  /// deg N + #den
  int effective_degree() const { return num_.degree() + static_cast<int>(den_.size()); }

  RationalMatFn with_grid_log2(int g) const { return {num_, den_, g}; }

 private:
  MatPoly num_;
  std::vector<cplx> den_;
  int grid_log2_ = 2;
};

/// Sample k is the value at z_k = exp(2 pi i k / G).
struct GridSamples {
  std::vector<CMatrix> values;

  int size() const { return static_cast<int>(values.size()); }
  const CMatrix& operator[](int k) const { return values[static_cast<std::size_t>(k)]; }
  CMatrix& operator[](int k) { return values[static_cast<std::size_t>(k)]; }
};

cplx grid_node(int k, int G);

GridSamples operator*(const GridSamples& a, const GridSamples& b);
GridSamples adjoint(const GridSamples& s);

/// Throws std::invalid_argument for |z| > 1.
CMatrix eval(const RationalMatFn& F, cplx z);

GridSamples to_grid(const RationalMatFn& F);
/// Samples on an explicit grid of size 2^g (g must be at least F's own grid).
GridSamples to_grid(const RationalMatFn& F, int grid_log2);

/// Discrete Fourier coefficients: bin n = (1/G) sum_k S_k z_k^{-n}.
std::vector<CMatrix> grid_coefficients(const GridSamples& S);

/// Multiply S by q(z_k), transform, certify every bin beyond degree_bound
/// (including negative frequencies) is <= tol.abs, and return N / q.
/// Throws CertificationFailure otherwise.
RationalMatFn from_grid(const GridSamples& S, int degree_bound, const std::vector<cplx>& den_zeros,
                        const Tolerance& tol = {});

struct SpectrumSplit {
  std::vector<CMatrix> bins;
  double negative = 0.0;  ///< max norm over bins G/2 .. G-1
  double tail = 0.0;      ///< max norm over bins degree_bound+1 .. G/2-1
};

/// Non-throwing spectral split of q * S.
SpectrumSplit split_spectrum(const GridSamples& S, int degree_bound, const std::vector<cplx>& den_zeros = {});

/// Returns the nonnegative-frequency part of S.
/// Throws NotAnalytic if any negative bin exceeds tol.abs and
/// CertificationFailure if a bin in degree_bound+1 .. G/2-1 does.
MatPoly analytic_part_certify(const GridSamples& S, int degree_bound, const Tolerance& tol = {});
/// Same, for samples of N / q with the given denominator zeros.
RationalMatFn analytic_part_certify(const GridSamples& S, int degree_bound, const std::vector<cplx>& den_zeros,
                                    const Tolerance& tol = {});

RationalMatFn multiply(const RationalMatFn& F, const RationalMatFn& G, const Tolerance& tol = {});
/// z -> F(conj z)^*
RationalMatFn tilde(const RationalMatFn& F);
/// Samples F(z_k)^* (generally not analytic).
GridSamples adjoint_on_circle(const RationalMatFn& F);

/// Coefficients A_n with F = sum_n A_n b_alpha^n. Throws CertificationFailure
/// when F is not a polynomial in b_alpha of degree max(deg N, #den).
MatPoly compose_blaschke(const RationalMatFn& F, cplx alpha, const Tolerance& tol = {});
/// sum_n A_n b_alpha^n as a rational function.
RationalMatFn shift_back(const MatPoly& A, cplx alpha);

/// Taylor coefficients 0 .. count-1 at the origin.
MatPoly taylor_coefficients(const RationalMatFn& F, int count);

/// max_k ||F(z_k)^* F(z_k) - I||_F
double inner_residual(const RationalMatFn& F, int grid_log2 = 0);
/// max of the above and max_k ||F(z_k) F(z_k)^* - I||_F
double two_sided_inner_residual(const RationalMatFn& F, int grid_log2 = 0);
/// With `recheck`, the verdict must also hold on the doubled grid.
bool is_inner(const RationalMatFn& F, const Tolerance& tol = {}, bool recheck = false);
bool is_two_sided_inner(const RationalMatFn& F, const Tolerance& tol = {}, bool recheck = false);

/// max_k ||F(z_k) - G(z_k)||_F over a grid fine enough for both.
double sup_distance(const RationalMatFn& F, const RationalMatFn& G);

/// Constant unitary U with F = G U, computed at z = 1 and checked on the grid.
std::optional<CMatrix> align_right_unitary(const RationalMatFn& F, const RationalMatFn& G, const Tolerance& tol = {});

}  // namespace hardy
