#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "optpred/measure.hpp"

namespace optpred::regression {

/// Name of the generator recorded in simulation output.
inline constexpr const char* kGeneratorName = "mt19937_64 per replicate, seeds via splitmix64(seed, replicate)";
inline constexpr int kMinReplicates = 1000;

/// Replicated design for noisy polynomial regression y = sum_k theta_k T_k(x) + sigma eps.
struct RegressionPlan {
  NodeSet nodes;
  std::vector<int> counts;    ///< observations per node, each >= 1
  double sigma = 1.0;
  std::vector<double> theta;  ///< true coefficients; degree n = size - 1

  int m() const;
  int degree() const { return static_cast<int>(theta.size()) - 1; }
  /// Empirical design measure counts / m.
  DiscreteMeasure realized_measure() const;
  /// Each node repeated counts[i] times.
  std::vector<double> observation_points() const;
};

/// Throws InputError if counts, sigma or theta are inconsistent.
void validate(const RegressionPlan& plan);

/// Integer counts summing to m by largest-remainder rounding of m * w_i.
/// Nodes that would round to zero receive one observation taken from the
/// largest count.
std::vector<int> largest_remainder_counts(std::span<const double> weights, int m);

RegressionPlan make_plan(const DiscreteMeasure& design, int m, double sigma, std::vector<double> theta);

/// Rows (T_0(x_k), ..., T_n(x_k)); throws RankDeficiencyError below full column rank.
Eigen::MatrixXd vandermonde(std::span<const double> points, int n);

/// Least-squares coefficients via column-pivoted Householder QR.
Eigen::VectorXd least_squares_fit(const Eigen::MatrixXd& v, const Eigen::VectorXd& y);

struct VarianceEstimate {
  double empirical = 0.0;
  double predicted = 0.0;  ///< sigma^2 / m * K_n^{mu_X}(z0, z0)
  int replicates = 0;
  double rel_error = 0.0;
  double half_width = 0.0; ///< approximate 95% half-width of the empirical variance
  std::uint64_t seed = 0;
};

/// Monte Carlo variance of the fitted predictor at z0 (E|p_hat(z0) - mean|^2
/// for complex z0). Results depend only on seed, never on threads.
VarianceEstimate mc_predictor_variance(const RegressionPlan& plan, cplx z0, int replicates,
                                       std::uint64_t seed, unsigned threads = 1);

} // namespace optpred::regression
