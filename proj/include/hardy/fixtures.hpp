#pragma once

#include <random>

#include "hardy/blaschke.hpp"

namespace hardy::fixtures {

using Rng = std::mt19937_64;

/// Haar-like unitary: QR of a complex Gaussian matrix with phase-corrected R diagonal.
CMatrix random_unitary(Index d, Rng& rng);
/// Orthogonal projection of the given rank onto a random subspace.
CMatrix random_projection(Index d, Index rank, Rng& rng);
CMatrix random_matrix(Index rows, Index cols, Rng& rng);
/// Uniform in the disk of the given radius.
cplx random_disk_point(double radius, Rng& rng);
MatPoly random_matpoly(Index rows, Index cols, int degree, Rng& rng);

struct BPSpec {
  Index dim = 3;
  int factors = 3;
  double max_radius = 0.9;
  /// Probability that a factor reuses the previous alpha.
  double repeat_probability = 0.0;
};

/// Random product with projections of rank 1 .. d.
BPProduct random_bp_product(const BPSpec& spec, Rng& rng);

/// theta I_d as a Blaschke-Potapov product with identity projections.
BPProduct scalar_bp(const FiniteBlaschkeProduct& theta, Index d);

/// Analytic projection of delta a^* for analytic rational delta and polynomial a.
/// Its Hankel operator H_{phi^*} coincides with that of delta a^*.
RationalMatFn analytic_projection(const RationalMatFn& delta, const MatPoly& a);

}  // namespace hardy::fixtures
