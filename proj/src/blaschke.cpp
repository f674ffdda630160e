#include "hardy/blaschke.hpp"

#include <cmath>
#include <stdexcept>

namespace hardy {

cplx FiniteBlaschkeProduct::eval(cplx z) const {
  cplx v = unimodular;
  for (cplx a : zeros) v *= blaschke_factor(a, z);
  return v;
}

std::vector<cplx> FiniteBlaschkeProduct::distinct_zeros(double eps) const {
  std::vector<cplx> out;
  for (cplx a : zeros) {
    bool seen = false;
    for (cplx b : out) seen = seen || std::abs(a - b) <= eps;
    if (!seen) out.push_back(a);
  }
  return out;
}

void FiniteBlaschkeProduct::validate() const {
  if (std::abs(std::abs(unimodular) - 1.0) > 1e-12) throw std::invalid_argument("Blaschke product: |nu| != 1");
  for (cplx a : zeros)
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("Blaschke product: zero outside the open disk");
}

CMatrix BPFactor::eval(cplx z) const {
  const CMatrix I = CMatrix::Identity(dim(), dim());
  return blaschke_factor(alpha, z) * proj + (I - proj);
}

MatPoly BPFactor::numerator() const {
  const CMatrix I = CMatrix::Identity(dim(), dim());
  return MatPoly({-alpha * proj + (I - proj), proj - std::conj(alpha) * (I - proj)});
}

void BPFactor::validate(const Tolerance& tol) const {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("BP factor: |alpha| >= 1");
  if (!is_projection(proj, tol)) throw std::invalid_argument("BP factor: proj is not an orthogonal projection");
}

CMatrix BPProduct::eval(cplx z) const {
  CMatrix acc = unitary;
  for (const auto& f : factors) acc = (acc * f.eval(z)).eval();
  return acc;
}

std::vector<cplx> BPProduct::alphas() const {
  std::vector<cplx> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.alpha);
  return out;
}

void BPProduct::validate(const Tolerance& tol) const {
  if (!is_unitary(unitary, tol)) throw std::invalid_argument("BP product: V is not unitary");
  for (const auto& f : factors) {
    if (f.dim() != dim()) throw std::invalid_argument("BP product: factor dimension mismatch");
    f.validate(tol);
  }
}

CMatrix bp_eval(const BPFactor& B, cplx z) { return B.eval(z); }
CMatrix bp_eval(const BPProduct& B, cplx z) { return B.eval(z); }

RationalMatFn expand(const FiniteBlaschkeProduct& theta) {
  ScalarPoly p{theta.unimodular};
  for (cplx a : theta.zeros) p = poly_mul(p, {-a, 1.0});
  std::vector<CMatrix> c;
  for (cplx v : p) c.push_back(CMatrix::Constant(1, 1, v));
  return {MatPoly(std::move(c)), theta.zeros, 0};
}

RationalMatFn expand(const BPProduct& B) {
  MatPoly acc = MatPoly::constant(B.unitary);
  for (const auto& f : B.factors) acc = acc * f.numerator();
  return {std::move(acc), B.alphas(), 0};
}

GridSamples bp_inverse_samples(const BPFactor& B, int grid_log2) {
  const int G = 1 << grid_log2;
  const CMatrix I = CMatrix::Identity(B.dim(), B.dim());
  GridSamples S;
  S.values.reserve(static_cast<std::size_t>(G));
  for (int k = 0; k < G; ++k)
    S.values.push_back(std::conj(blaschke_factor(B.alpha, grid_node(k, G))) * B.proj + (I - B.proj));
  return S;
}

BPProduct canonicalize(const BPProduct& B, const Tolerance& tol) {
  BPProduct out{B.unitary, {}};
  for (const auto& f : B.factors)
    if (f.proj.norm() > tol.abs && numerical_rank(f.proj, tol) > 0) out.factors.push_back(f);
  return out;
}

}  // namespace hardy
