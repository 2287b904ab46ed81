#pragma once

#include <cstdint>
#include <vector>

#include "optpred/measure.hpp"
#include "optpred/polynomial.hpp"

namespace optpred {

/// Threshold on both the sup-norm excess and the duality gap.
inline constexpr double kCertificationTol = 1e-8;

/// Numerical check of the equivalence theorem: the normalized kernel
/// polynomial of an optimal measure has sup-norm 1 on [-1, 1].
struct Certificate {
  double sup_norm = 0.0;
  double max_violation = 0.0;  ///< max(0, sup_norm - 1)
  double l2_mu_norm = 0.0;     ///< sqrt(sum_k w_k |P(x_k)|^2)
  std::vector<double> on_support_moduli;
  double duality_gap = 0.0;    ///< |K - |P(z0)|^2| / K

  bool certified() const noexcept {
    return max_violation <= kCertificationTol && duality_gap <= kCertificationTol;
  }
};

struct Design {
  DiscreteMeasure measure;
  cplx z0;
  int n = 0;
  double K_value = 0.0;
  ComplexPoly extremal_poly;
  Certificate certificate;

  // Optimizer bookkeeping; defaults describe a design built directly from nodes.
  double lebesgue = 0.0;
  bool converged = true;
  int evaluations = 0;
};

struct OptimizerOptions {
  std::uint64_t seed = 0;
  int starts = 8;
  double dither = 0.05;
  double diameter_tol = 1e-12;
  int max_evaluations = 20000;  ///< per start, restarts included
  int max_restarts = 8;         ///< simplex restarts per start
  unsigned threads = 1;
};

/// z0 is exterior unless |Im z0| < 1e-12 and Re z0 in [-1, 1].
bool is_exterior(cplx z0) noexcept;

/// cos(k pi / n), k = n..0, i.e. increasing from -1 to 1.
std::vector<double> chebyshev_extreme_points(int n);

/// w_i = |ell_i(z0)| / sum_j |ell_j(z0)|.
std::vector<double> hoel_levine_weights(const NodeSet& nodes, cplx z0);

/// Lambda(z0) = sum_i |ell_i(z0)|.
double lebesgue_at(const NodeSet& nodes, cplx z0);

/// sum_i sgn(ell_i(z0)) ell_i with sgn(z) = conj(z) / |z|.
ComplexPoly extremal_signed_poly(const NodeSet& nodes, cplx z0);

/// Hoel-Levine design on the given support (degree = size - 1), certified.
Design make_design(const NodeSet& nodes, cplx z0);

Certificate certify(const Design& design);

/// Minimizes Lambda(z0) over the n - 1 interior nodes with +-1 pinned.
/// Deterministic for a given opts.seed regardless of opts.threads.
Design optimize_support(int n, cplx z0, const OptimizerOptions& opts = {});

} // namespace optpred
