#include "optpred/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "optpred/errors.hpp"

namespace optpred::io {

namespace {

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("complex values are [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

json to_json(const ComplexPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(complex_pair(c));
  return {{"basis", "chebyshev"}, {"coeffs", coeffs}};
}

ComplexPoly poly_from_json(const json& j) {
  if (j.value("basis", std::string()) != "chebyshev") throw InputError("only the chebyshev basis is supported");
  std::vector<cplx> coeffs;
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw InputError("polynomial needs a 'coeffs' array");
  for (const auto& c : j["coeffs"]) coeffs.push_back(complex_from(c));
  return ComplexPoly(std::move(coeffs));
}

json to_json(const DiscreteMeasure& mu) {
  return {{"nodes", std::vector<double>(mu.nodes().begin(), mu.nodes().end())},
          {"weights", std::vector<double>(mu.weights().begin(), mu.weights().end())}};
}

DiscreteMeasure measure_from_json(const json& j) {
  return DiscreteMeasure(NodeSet(required<std::vector<double>>(j, "nodes")),
                         required<std::vector<double>>(j, "weights"));
}

json to_json(const Certificate& c) {
  return {{"sup_norm", c.sup_norm},
          {"max_violation", c.max_violation},
          {"l2_mu_norm", c.l2_mu_norm},
          {"on_support_moduli", c.on_support_moduli},
          {"duality_gap", c.duality_gap},
          {"certified", c.certified()}};
}

json to_json(const Design& d) {
  json j = to_json(d.measure);
  j["n"] = d.n;
  j["z0"] = complex_pair(d.z0);
  j["K_value"] = d.K_value;
  j["lebesgue"] = d.lebesgue;
  j["poly"] = to_json(d.extremal_poly);
  j["certificate"] = to_json(d.certificate);
  j["optimizer"] = {{"converged", d.converged}, {"evaluations", d.evaluations}};
  return j;
}

Design design_from_json(const json& j) {
  if (!j.contains("z0")) throw InputError("missing field 'z0'");
  Design d{measure_from_json(j), complex_from(j.at("z0")), required<int>(j, "n"),
           required<double>(j, "K_value"), poly_from_json(j.at("poly")), {}};
  if (static_cast<int>(d.measure.size()) != d.n + 1) throw InputError("design must have n + 1 nodes");
  if (!is_exterior(d.z0)) throw InputError("z0 is not exterior to [-1, 1]");
  const ComplexPoly kernel = kernel_poly(d.measure, d.n, d.z0);
  double scale = 1.0;
  for (const auto& c : kernel.coeffs()) scale = std::max(scale, std::abs(c));
  if (max_coeff_distance(kernel, d.extremal_poly) > kCertificationTol * scale) {
    throw InputError("stored polynomial is not the kernel polynomial of the stored measure");
  }
  if (std::abs(christoffel(d.measure, d.n, d.z0).value - d.K_value) > kCertificationTol * d.K_value) {
    throw InputError("stored K_value does not match the stored measure");
  }
  d.lebesgue = j.value("lebesgue", 0.0);
  if (j.contains("optimizer")) {
    d.converged = j["optimizer"].value("converged", true);
    d.evaluations = j["optimizer"].value("evaluations", 0);
  }
  d.certificate = certify(d);
  return d;
}

regression::RegressionPlan plan_from_json(const json& j) {
  NodeSet nodes(required<std::vector<double>>(j, "nodes"));
  const double sigma = j.value("sigma", 1.0);
  std::vector<double> theta;
  if (j.contains("theta")) {
    theta = required<std::vector<double>>(j, "theta");
  } else {
    theta.assign(static_cast<std::size_t>(required<int>(j, "n")) + 1, 0.0);
  }
  std::vector<int> counts;
  if (j.contains("counts")) {
    counts = required<std::vector<int>>(j, "counts");
  } else {
    const DiscreteMeasure mu(nodes, required<std::vector<double>>(j, "weights"));
    counts = regression::largest_remainder_counts(mu.weights(), required<int>(j, "m"));
  }
  regression::RegressionPlan plan{std::move(nodes), std::move(counts), sigma, std::move(theta)};
  regression::validate(plan);
  return plan;
}

json to_json(const regression::RegressionPlan& plan) {
  return {{"nodes", std::vector<double>(plan.nodes.begin(), plan.nodes.end())},
          {"counts", plan.counts},
          {"m", plan.m()},
          {"sigma", plan.sigma},
          {"theta", plan.theta}};
}

json to_json(const regression::VarianceEstimate& est, const regression::RegressionPlan& plan, cplx z0) {
  return {{"plan", to_json(plan)},
          {"z0", complex_pair(z0)},
          {"replicates", est.replicates},
          {"seed", est.seed},
          {"empirical", est.empirical},
          {"predicted", est.predicted},
          {"rel_error", est.rel_error},
          {"half_width", est.half_width},
          {"metadata",
           {{"generator", regression::kGeneratorName},
            {"variance_convention", z0.imag() == 0.0 ? "real: E(p - mean)^2"
                                                     : "complex z0: E|p - mean|^2 (modeling choice)"}}}};
}

std::string gram_csv(const GramMatrix& g) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < g.entries.cols(); ++k) {
      const cplx v = g.entries(i, k);
      if (k > 0) out << ',';
      out << format_double(v.real()) << (v.imag() < 0.0 ? "" : "+") << format_double(v.imag()) << 'j';
    }
    out << '\n';
  }
  return out.str();
}

std::string poly_samples_csv(const ComplexPoly& p, int points) {
  if (points < 2) throw InputError("need at least two sample points");
  std::ostringstream out;
  out << "x,re,im,abs\n";
  for (int k = 0; k < points; ++k) {
    const double x = -1.0 + 2.0 * k / (points - 1);
    const cplx v = p(x);
    out << format_double(x) << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << ','
        << format_double(std::abs(v)) << '\n';
  }
  return out.str();
}

} // namespace optpred::io
