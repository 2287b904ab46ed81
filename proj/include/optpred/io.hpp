#pragma once

#include <string>

#include "json.hpp"

#include "optpred/design.hpp"
#include "optpred/measure.hpp"
#include "optpred/polynomial.hpp"
#include "optpred/regression.hpp"

namespace optpred::io {

using nlohmann::json;

json to_json(const ComplexPoly& p);
ComplexPoly poly_from_json(const json& j);

json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);

json to_json(const Certificate& c);

/// {n, z0: [re, im], nodes, weights, K_value, poly, certificate, ...}
json to_json(const Design& d);
/// Rebuilds the design from its stored fields and recomputes the certificate.
Design design_from_json(const json& j);

/// {nodes, counts | (weights, m), sigma, theta}
regression::RegressionPlan plan_from_json(const json& j);
json to_json(const regression::RegressionPlan& plan);

json to_json(const regression::VarianceEstimate& est, const regression::RegressionPlan& plan, cplx z0);

/// Row-major "re+imj" cells, one matrix row per line.
std::string gram_csv(const GramMatrix& g);

/// x,re,im,abs on a uniform grid of `points` samples over [-1, 1].
std::string poly_samples_csv(const ComplexPoly& p, int points = 1001);

} // namespace optpred::io
