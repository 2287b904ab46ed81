#include "optpred/design.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "optpred/errors.hpp"
#include "optpred/seeding.hpp"
#include "optpred/simplex_search.hpp"

namespace optpred {

namespace {

void require_off_nodes(const NodeSet& nodes, cplx z0) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::abs(z0 - nodes[i]) <= 1e-14) {
      throw DomainError("z0 coincides with node " + std::to_string(i));
    }
  }
}

// Interior nodes are parametrized by log-gaps relative to the last gap, so any
// parameter vector maps to a strictly increasing support with +-1 pinned.
std::vector<double> nodes_from_params(std::span<const double> y) {
  const std::size_t gaps = y.size() + 1;
  std::vector<double> g(gaps, 1.0);
  for (std::size_t k = 0; k < y.size(); ++k) g[k] = std::exp(std::clamp(y[k], -40.0, 40.0));
  double total = 0.0;
  for (double v : g) total += v;
  std::vector<double> x(gaps + 1);
  x[0] = -1.0;
  double run = 0.0;
  for (std::size_t k = 1; k < gaps; ++k) {
    run += g[k - 1];
    x[k] = -1.0 + 2.0 * run / total;
  }
  x[gaps] = 1.0;
  return x;
}

std::vector<double> params_from_nodes(std::span<const double> x) {
  const std::size_t gaps = x.size() - 1;
  const double last = x[gaps] - x[gaps - 1];
  std::vector<double> y(gaps - 1);
  for (std::size_t k = 0; k + 1 < gaps; ++k) y[k] = std::log((x[k + 1] - x[k]) / last);
  return y;
}

// Lambda(z0) without the NodeSet validation; +inf for degenerate supports.
double lebesgue_raw(std::span<const double> x, cplx z0) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i - 1] < x[i])) return std::numeric_limits<double>::infinity();
  }
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cplx v(1.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) v *= (z0 - x[j]) / (x[i] - x[j]);
    }
    total += std::abs(v);
  }
  return total;
}

struct StartResult {
  std::vector<double> nodes;
  double lebesgue = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  bool converged = false;
};

StartResult run_start(int n, cplx z0, const OptimizerOptions& opts, int start) {
  std::vector<double> x = chebyshev_extreme_points(n);
  if (start > 0) {
    std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(start)));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const std::vector<double> base = x;
    for (int k = 1; k < n; ++k) x[k] += opts.dither * unit(rng) * 0.5 * (base[k + 1] - base[k - 1]);
  }

  const Objective objective = [z0](std::span<const double> y) { return lebesgue_raw(nodes_from_params(y), z0); };

  SimplexOptions sopts;
  sopts.diameter_tol = opts.diameter_tol;
  sopts.max_evaluations = opts.max_evaluations;
  SimplexResult best = nelder_mead(objective, params_from_nodes(x), sopts);
  StartResult out;
  out.evaluations = best.evaluations;
  bool settled = false;
  // Restart from the incumbent until a restart stops improving it.
  for (int r = 0; r < opts.max_restarts && out.evaluations < opts.max_evaluations; ++r) {
    sopts.initial_step = 1e-2;
    sopts.max_evaluations = opts.max_evaluations - out.evaluations;
    SimplexResult again = nelder_mead(objective, best.x, sopts);
    out.evaluations += again.evaluations;
    const bool improved = again.value < best.value;
    if (improved) best = std::move(again);
    if (!improved && best.converged) {
      settled = true;
      break;
    }
    best.converged = again.converged;
  }
  out.nodes = nodes_from_params(best.x);
  out.lebesgue = best.value;
  out.converged = settled;
  return out;
}

} // namespace

bool is_exterior(cplx z0) noexcept {
  if (!std::isfinite(z0.real()) || !std::isfinite(z0.imag())) return false;
  return !(std::abs(z0.imag()) < 1e-12 && z0.real() >= -1.0 && z0.real() <= 1.0);
}

std::vector<double> chebyshev_extreme_points(int n) {
  if (n < 1) throw DomainError("chebyshev_extreme_points requires n >= 1");
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) x[static_cast<std::size_t>(k)] = -std::cos(std::numbers::pi * k / n);
  x.front() = -1.0;
  x.back() = 1.0;
  if (n % 2 == 0) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return x;
}

std::vector<double> hoel_levine_weights(const NodeSet& nodes, cplx z0) {
  require_off_nodes(nodes, z0);
  const auto ell = lagrange_values(nodes, z0);
  std::vector<double> w(ell.size());
  double total = 0.0;
  for (std::size_t i = 0; i < ell.size(); ++i) total += (w[i] = std::abs(ell[i]));
  for (auto& v : w) v /= total;
  return w;
}

double lebesgue_at(const NodeSet& nodes, cplx z0) {
  double total = 0.0;
  for (const auto& v : lagrange_values(nodes, z0)) total += std::abs(v);
  return total;
}

ComplexPoly extremal_signed_poly(const NodeSet& nodes, cplx z0) {
  require_off_nodes(nodes, z0);
  auto signs = lagrange_values(nodes, z0);
  for (auto& s : signs) s = std::conj(s) / std::abs(s);
  return from_lagrange_combination(nodes, signs);
}

Design make_design(const NodeSet& nodes, cplx z0) {
  const int n = static_cast<int>(nodes.size()) - 1;
  DiscreteMeasure mu(nodes, hoel_levine_weights(nodes, z0));
  Design d{std::move(mu), z0, n, 0.0, extremal_signed_poly(nodes, z0), {}};
  d.K_value = christoffel(d.measure, n, z0).value;
  d.lebesgue = lebesgue_at(nodes, z0);
  d.certificate = certify(d);
  return d;
}

Certificate certify(const Design& design) {
  Certificate c;
  c.sup_norm = sup_norm_interval(design.extremal_poly).value;
  c.max_violation = std::max(0.0, c.sup_norm - 1.0);
  c.l2_mu_norm = std::sqrt(l2_norm_squared(design.measure, design.extremal_poly));
  for (double x : design.measure.nodes()) c.on_support_moduli.push_back(std::abs(design.extremal_poly(x)));
  c.duality_gap = std::abs(design.K_value - std::norm(design.extremal_poly(design.z0))) / design.K_value;
  return c;
}

Design optimize_support(int n, cplx z0, const OptimizerOptions& opts) {
  if (n < 1) throw DomainError("optimize_support requires n >= 1");
  if (!is_exterior(z0)) throw DomainError("z0 is not exterior to [-1, 1]");
  if (opts.starts < 1) throw InputError("optimizer needs at least one start");

  if (z0.real() == 0.0 && z0.imag() < 0.0) {
    // Mirror of the design for -z0 = |a| i.
    Design mirrored = optimize_support(n, -z0, opts);
    Design d = make_design(mirrored.measure.nodes().reflected(), z0);
    d.converged = mirrored.converged;
    d.evaluations = mirrored.evaluations;
    return d;
  }
  if (n == 1) return make_design(NodeSet({-1.0, 1.0}), z0);

  std::vector<StartResult> results(static_cast<std::size_t>(opts.starts));
  const unsigned workers = std::max(1u, opts.threads);
  for (int first = 0; first < opts.starts; first += static_cast<int>(workers)) {
    std::vector<std::future<StartResult>> batch;
    const int last = std::min(opts.starts, first + static_cast<int>(workers));
    for (int s = first; s < last; ++s) {
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 run_start, n, z0, std::cref(opts), s));
    }
    for (int s = first; s < last; ++s) results[static_cast<std::size_t>(s)] = batch[static_cast<std::size_t>(s - first)].get();
  }

  int total_evals = 0;
  bool any_converged = false;
  std::optional<Design> best_certified;
  std::optional<Design> best_any;
  for (const auto& r : results) {
    total_evals += r.evaluations;
    any_converged = any_converged || r.converged;
    Design d = make_design(NodeSet(r.nodes), z0);
    d.converged = r.converged;
    if (d.certificate.certified() && (!best_certified || d.lebesgue < best_certified->lebesgue)) {
      best_certified = d;
    }
    if (!best_any || d.lebesgue < best_any->lebesgue) best_any = std::move(d);
  }
  Design out = best_certified ? std::move(*best_certified) : std::move(*best_any);
  out.evaluations = total_evals;
  if (!best_certified) out.converged = any_converged && out.converged;
  return out;
}

} // namespace optpred
