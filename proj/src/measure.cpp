#include "optpred/measure.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/QR>

#include "optpred/chebyshev.hpp"
#include "optpred/errors.hpp"

namespace optpred {

namespace {

constexpr double kPivotFloor = 1e-13;

void check_degree(int n) {
  if (n < 0 || n > chebyshev::kMaxDegree) throw DomainError("degree " + std::to_string(n) + " out of range");
}

// Lower-triangular L with G_n(mu) = L L^*, taken from a Householder QR of the
// weighted Chebyshev-Vandermonde matrix rows sqrt(w_k) p(x_k)^T. This yields
// the Cholesky factor of G without squaring the conditioning by forming G.
Eigen::MatrixXcd gram_factor(const DiscreteMeasure& mu, int n) {
  check_degree(n);
  const Eigen::Index cols = n + 1;
  const auto rows = static_cast<Eigen::Index>(mu.size());
  if (rows < cols) {
    throw RankDeficiencyError("Gram matrix of degree " + std::to_string(n) + " needs at least " +
                              std::to_string(cols) + " support points, got " + std::to_string(rows));
  }
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double x = mu.nodes()[static_cast<std::size_t>(k)];
    const double s = std::sqrt(mu.weights()[static_cast<std::size_t>(k)]);
    a(k, 0) = s;
    if (cols > 1) a(k, 1) = s * x;
    for (Eigen::Index j = 2; j < cols; ++j) a(k, j) = 2.0 * x * a(k, j - 1) - a(k, j - 2);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const double pivot = r(j, j) * r(j, j);
    if (!(pivot >= kPivotFloor)) {
      throw RankDeficiencyError("Gram matrix is rank deficient (pivot " + std::to_string(pivot) +
                                " at index " + std::to_string(j) + ")");
    }
  }
  return r.transpose().cast<cplx>();
}

// Solves L y = b for lower-triangular L.
Eigen::VectorXcd forward_solve(const Eigen::MatrixXcd& l, const Eigen::VectorXcd& b) {
  return l.triangularView<Eigen::Lower>().solve(b);
}

// G^{-1} b using G = L L^*.
Eigen::VectorXcd cholesky_solve(const Eigen::MatrixXcd& l, const Eigen::VectorXcd& b) {
  const Eigen::VectorXcd y = forward_solve(l, b);
  return l.adjoint().triangularView<Eigen::Upper>().solve(y);
}

} // namespace

DiscreteMeasure::DiscreteMeasure(NodeSet nodes, std::vector<double> weights)
  : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (weights_.size() != nodes_.size()) {
    throw InputError("measure has " + std::to_string(nodes_.size()) + " nodes but " +
                     std::to_string(weights_.size()) + " weights");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw InputError("weight " + std::to_string(i) + " is not strictly positive");
    }
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw InputError("weights sum to " + std::to_string(total) + ", not 1");
  }
  for (auto& w : weights_) w /= total;
}

DiscreteMeasure DiscreteMeasure::reflected() const {
  std::vector<double> w(weights_.rbegin(), weights_.rend());
  return DiscreteMeasure(nodes_.reflected(), std::move(w));
}

Eigen::VectorXcd chebyshev_vector(int n, cplx z) {
  check_degree(n);
  Eigen::VectorXcd p(n + 1);
  p(0) = 1.0;
  if (n >= 1) p(1) = z;
  for (int k = 2; k <= n; ++k) p(k) = 2.0 * z * p(k - 1) - p(k - 2);
  return p;
}

GramMatrix gram(const DiscreteMeasure& mu, int n) {
  check_degree(n);
  GramMatrix g{Eigen::MatrixXcd::Zero(n + 1, n + 1), n};
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const Eigen::VectorXcd p = chebyshev_vector(n, cplx(mu.nodes()[k], 0.0));
    g.entries.noalias() += mu.weights()[k] * p * p.adjoint();
  }
  return g;
}

Eigen::MatrixXcd hermitian_cholesky(const Eigen::MatrixXcd& g) {
  const Eigen::Index size = g.rows();
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    double pivot = g(j, j).real();
    for (Eigen::Index k = 0; k < j; ++k) pivot -= std::norm(l(j, k));
    if (!(pivot >= kPivotFloor)) {
      throw RankDeficiencyError("Gram matrix is rank deficient (pivot " + std::to_string(pivot) +
                                " at index " + std::to_string(j) + ")");
    }
    const double diag = std::sqrt(pivot);
    l(j, j) = diag;
    for (Eigen::Index i = j + 1; i < size; ++i) {
      cplx s = g(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / diag;
    }
  }
  return l;
}

KernelValue christoffel(const DiscreteMeasure& mu, int n, cplx z0) {
  const Eigen::MatrixXcd l = gram_factor(mu, n);
  const Eigen::VectorXcd y = forward_solve(l, chebyshev_vector(n, z0));
  return {y.squaredNorm(), n, z0};
}

double christoffel_lagrange(const DiscreteMeasure& mu, cplx z0) {
  const auto ell = lagrange_values(mu.nodes(), z0);
  double k = 0.0;
  for (std::size_t i = 0; i < ell.size(); ++i) k += std::norm(ell[i]) / mu.weights()[i];
  return k;
}

ComplexPoly kernel_poly(const DiscreteMeasure& mu, int n, cplx z0) {
  for (double x : mu.nodes()) {
    if (z0 == cplx(x, 0.0)) throw DomainError("kernel_poly: z0 lies on the support");
  }
  const Eigen::MatrixXcd l = gram_factor(mu, n);
  const Eigen::VectorXcd p0 = chebyshev_vector(n, z0);
  const Eigen::VectorXcd solved = cholesky_solve(l, p0);
  const double k = forward_solve(l, p0).squaredNorm();
  // p^*(z0) G^{-1} p(z) has T_k coefficient conj((G^{-1} p(z0))_k).
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = std::conj(solved(i)) / std::sqrt(k);
  return ComplexPoly(std::move(c));
}

double l2_norm_squared(const DiscreteMeasure& mu, const ComplexPoly& p) {
  double s = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) s += mu.weights()[k] * std::norm(p(mu.nodes()[k]));
  return s;
}

double directional_derivative_K(const DiscreteMeasure& mu0, double a, int n, cplx z0) {
  const double k = christoffel(mu0, n, z0).value;
  const ComplexPoly p = kernel_poly(mu0, n, z0);
  return k * (1.0 - std::norm(p(a)));
}

} // namespace optpred
