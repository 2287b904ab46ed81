#pragma once

#include <functional>
#include <span>
#include <vector>

namespace optpred {

struct SimplexOptions {
  /// Edge length of the initial right-angled simplex.
  double initial_step = 0.1;
  /// Stop once every vertex is within this (max-norm) distance of the best one.
  double diameter_tol = 1e-12;
  int max_evaluations = 20000;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Nelder-Mead downhill simplex (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2). A zero-dimensional problem is evaluated once and returned.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opts);

} // namespace optpred
