#include "optpred/regression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include <Eigen/QR>

#include "optpred/chebyshev.hpp"
#include "optpred/errors.hpp"
#include "optpred/seeding.hpp"

namespace optpred::regression {

int RegressionPlan::m() const { return std::accumulate(counts.begin(), counts.end(), 0); }

DiscreteMeasure RegressionPlan::realized_measure() const {
  const double total = m();
  std::vector<double> w(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) w[i] = counts[i] / total;
  return DiscreteMeasure(nodes, std::move(w));
}

std::vector<double> RegressionPlan::observation_points() const {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(m()));
  for (std::size_t i = 0; i < counts.size(); ++i) pts.insert(pts.end(), static_cast<std::size_t>(counts[i]), nodes[i]);
  return pts;
}

void validate(const RegressionPlan& plan) {
  if (plan.counts.size() != plan.nodes.size()) throw InputError("plan needs one count per node");
  for (int c : plan.counts) {
    if (c < 1) throw InputError("every node needs at least one observation");
  }
  if (!(plan.sigma >= 0.0) || !std::isfinite(plan.sigma)) throw InputError("sigma must be finite and >= 0");
  if (plan.theta.empty()) throw InputError("theta must hold at least one coefficient");
  if (plan.theta.size() > plan.nodes.size()) {
    throw InputError("degree " + std::to_string(plan.degree()) + " needs at least " +
                     std::to_string(plan.theta.size()) + " distinct nodes");
  }
}

std::vector<int> largest_remainder_counts(std::span<const double> weights, int m) {
  if (m < static_cast<int>(weights.size())) throw InputError("m is smaller than the number of nodes");
  std::vector<int> counts(weights.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  int assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = m * weights[i];
    counts[i] = static_cast<int>(std::floor(exact));
    assigned += counts[i];
    remainders.emplace_back(exact - counts[i], i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int k = 0; k < m - assigned; ++k) ++counts[remainders[static_cast<std::size_t>(k)].second];
  for (auto& c : counts) {
    if (c == 0) {
      ++c;
      --*std::max_element(counts.begin(), counts.end());
    }
  }
  return counts;
}

RegressionPlan make_plan(const DiscreteMeasure& design, int m, double sigma, std::vector<double> theta) {
  RegressionPlan plan{design.nodes(), largest_remainder_counts(design.weights(), m), sigma, std::move(theta)};
  validate(plan);
  return plan;
}

Eigen::MatrixXd vandermonde(std::span<const double> points, int n) {
  if (n < 0 || n > chebyshev::kMaxDegree) throw DomainError("degree out of range");
  const auto rows = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd v(rows, n + 1);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double x = points[static_cast<std::size_t>(r)];
    v(r, 0) = 1.0;
    if (n >= 1) v(r, 1) = x;
    for (int k = 2; k <= n; ++k) v(r, k) = 2.0 * x * v(r, k - 1) - v(r, k - 2);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  if (qr.rank() < n + 1) {
    throw RankDeficiencyError("Vandermonde matrix has rank " + std::to_string(qr.rank()) + " < " +
                              std::to_string(n + 1));
  }
  return v;
}

Eigen::VectorXd least_squares_fit(const Eigen::MatrixXd& v, const Eigen::VectorXd& y) {
  if (v.rows() != y.size()) throw InputError("observation count does not match design rows");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  if (qr.rank() < v.cols()) throw RankDeficiencyError("design matrix is not of full column rank");
  return qr.solve(y);
}

VarianceEstimate mc_predictor_variance(const RegressionPlan& plan, cplx z0, int replicates,
                                       std::uint64_t seed, unsigned threads) {
  validate(plan);
  if (replicates < kMinReplicates) {
    throw InputError("at least " + std::to_string(kMinReplicates) + " replicates are required");
  }
  const int n = plan.degree();
  const auto points = plan.observation_points();
  const Eigen::MatrixXd v = vandermonde(points, n);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  const Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(plan.theta.data(), n + 1);
  const Eigen::VectorXd mean_response = v * theta;
  const Eigen::VectorXcd basis_at_z0 = chebyshev_vector(n, z0);

  std::vector<cplx> predictions(static_cast<std::size_t>(replicates));
  const auto run_range = [&](int begin, int end) {
    Eigen::VectorXd y(v.rows());
    for (int r = begin; r < end; ++r) {
      std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
      std::normal_distribution<double> noise(0.0, 1.0);
      for (Eigen::Index k = 0; k < y.size(); ++k) y(k) = mean_response(k) + plan.sigma * noise(rng);
      const Eigen::VectorXd fit = qr.solve(y);
      predictions[static_cast<std::size_t>(r)] = basis_at_z0.transpose() * fit.cast<cplx>();
    }
  };

  const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(replicates));
  if (workers == 1) {
    run_range(0, replicates);
  } else {
    std::vector<std::jthread> pool;
    const int chunk = (replicates + static_cast<int>(workers) - 1) / static_cast<int>(workers);
    for (int begin = 0; begin < replicates; begin += chunk) {
      pool.emplace_back(run_range, begin, std::min(replicates, begin + chunk));
    }
  }

  const cplx shift = predictions.front();
  cplx mean(0.0);
  for (const auto& p : predictions) mean += p - shift;
  mean /= static_cast<double>(replicates);
  double sum_sq = 0.0, sum_fourth = 0.0;
  for (const auto& p : predictions) {
    const double d = std::norm(p - shift - mean);
    sum_sq += d;
    sum_fourth += d * d;
  }

  VarianceEstimate est;
  est.replicates = replicates;
  est.seed = seed;
  est.empirical = sum_sq / (replicates - 1);
  const double spread = sum_fourth / replicates - std::pow(sum_sq / replicates, 2);
  est.half_width = 1.96 * std::sqrt(std::max(0.0, spread) / replicates);
  est.predicted = plan.sigma * plan.sigma / plan.m() * christoffel(plan.realized_measure(), n, z0).value;
  if (est.predicted > 0.0) {
    est.rel_error = std::abs(est.empirical - est.predicted) / est.predicted;
  } else {
    est.rel_error = est.empirical == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return est;
}

} // namespace optpred::regression
