#include "optpred/simplex_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace optpred {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

} // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opts) {
  const std::size_t dim = x0.size();
  SimplexResult result;
  if (dim == 0) {
    result.value = f(x0);
    result.evaluations = 1;
    result.converged = true;
    result.x = std::move(x0);
    return result;
  }

  int evals = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> x = x0;
    x[i] += opts.initial_step;
    simplex.push_back({x, eval(x)});
  }

  const auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  const auto diameter = [&]() {
    double d = 0.0;
    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) d = std::max(d, std::abs(simplex[v].x[i] - simplex[0].x[i]));
    }
    return d;
  };
  const auto along = [&](const std::vector<double>& centroid, const std::vector<double>& worst, double t) {
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = centroid[i] + t * (worst[i] - centroid[i]);
    return x;
  };

  bool converged = false;
  while (evals < opts.max_evaluations) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (diameter() < opts.diameter_tol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    Vertex& worst = simplex[dim];
    Vertex reflected{along(centroid, worst.x, -1.0), 0.0};
    reflected.f = eval(reflected.x);

    if (reflected.f < simplex[0].f) {
      Vertex expanded{along(centroid, worst.x, -2.0), 0.0};
      expanded.f = eval(expanded.x);
      worst = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
      continue;
    }
    if (reflected.f < simplex[dim - 1].f) {
      worst = std::move(reflected);
      continue;
    }

    const bool outside = reflected.f < worst.f;
    Vertex contracted{along(centroid, worst.x, outside ? -0.5 : 0.5), 0.0};
    contracted.f = eval(contracted.x);
    if (contracted.f < (outside ? reflected.f : worst.f)) {
      worst = std::move(contracted);
      continue;
    }

    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) {
        simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
      }
      simplex[v].f = eval(simplex[v].x);
    }
  }

  std::sort(simplex.begin(), simplex.end(), by_value);
  result.x = simplex[0].x;
  result.value = simplex[0].f;
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

} // namespace optpred
