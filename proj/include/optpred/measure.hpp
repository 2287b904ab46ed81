#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "optpred/polynomial.hpp"

namespace optpred {

/// Discrete probability measure sum_i w_i delta_{x_i} on [-1, 1].
class DiscreteMeasure {
public:
  /// Weights must be strictly positive and sum to 1 within 1e-12; they are
  /// then renormalized so the sum is 1 to rounding.
  DiscreteMeasure(NodeSet nodes, std::vector<double> weights);

  const NodeSet& nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

  /// x -> -x with weights carried along.
  DiscreteMeasure reflected() const;

private:
  NodeSet nodes_;
  std::vector<double> weights_;
};

/// Hermitian moment matrix G[i][j] = sum_k w_k T_i(x_k) conj(T_j(x_k)).
struct GramMatrix {
  Eigen::MatrixXcd entries;
  int basis_degree = 0;
};

struct KernelValue {
  double value = 0.0;
  int degree = 0;
  cplx point;
};

/// (T_0(z), ..., T_n(z)).
Eigen::VectorXcd chebyshev_vector(int n, cplx z);

GramMatrix gram(const DiscreteMeasure& mu, int n);

/// Lower-triangular L with G = L L^*. Throws RankDeficiencyError when a
/// pivot drops below 1e-13; the matrix is never regularized.
Eigen::MatrixXcd hermitian_cholesky(const Eigen::MatrixXcd& g);

/// K_n^mu(z0, z0) = p^*(z0) G^{-1} p(z0) = |L^{-1} p(z0)|^2, with the
/// Cholesky factor L of G obtained by Householder QR of the weighted
/// Chebyshev-Vandermonde matrix. Rank deficiency (pivot L_jj^2 < 1e-13)
/// raises RankDeficiencyError.
KernelValue christoffel(const DiscreteMeasure& mu, int n, cplx z0);

/// sum_i |ell_i(z0)|^2 / w_i; only valid when mu has exactly n + 1 nodes.
double christoffel_lagrange(const DiscreteMeasure& mu, cplx z0);

/// P_n^{mu,z0}(z) = K_n^mu(z0, z) / sqrt(K_n^mu(z0, z0)), where
/// K(w, z) = sum_k conj(q_k(w)) q_k(z) for a mu-orthonormal basis q.
ComplexPoly kernel_poly(const DiscreteMeasure& mu, int n, cplx z0);

/// sum_k w_k |p(x_k)|^2.
double l2_norm_squared(const DiscreteMeasure& mu, const ComplexPoly& p);

/// d/dt K_n^{mu_t}(z0, z0) at t = 0 along mu_t = t delta_a + (1 - t) mu0,
/// which equals K (1 - |P_n^{mu0,z0}(a)|^2).
double directional_derivative_K(const DiscreteMeasure& mu0, double a, int n, cplx z0);

} // namespace optpred
