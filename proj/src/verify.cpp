#include "optpred/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "optpred/design.hpp"
#include "optpred/errors.hpp"
#include "optpred/imaginary.hpp"
#include "optpred/measure.hpp"
#include "optpred/seeding.hpp"

namespace optpred::verify {

namespace {

constexpr double kImaginaryParams[] = {0.25, 1.0, 4.0};

std::vector<Design> imaginary_designs() {
  std::vector<Design> out;
  for (double a : kImaginaryParams) {
    for (int n = 1; n <= 8; ++n) out.push_back(imaginary::imaginary_design(n, a));
  }
  return out;
}

} // namespace

SuiteResult pell(std::uint64_t seed) {
  SuiteResult r{"pell", false, 0.0, 1e-9, 10000, {}};
  std::mt19937_64 rng(derive_seed(seed, 0));
  std::uniform_int_distribution<int> degree(1, 20);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < r.cases; ++k) {
    const int n = degree(rng);
    const double a = 10.0 * (1.0 - unit(rng));  // (0, 10]
    const double x = 2.0 * unit(rng) - 1.0;
    r.worst = std::max(r.worst, imaginary::pell_residual(n, a, x));
  }
  r.passed = r.worst <= r.threshold;
  return r;
}

SuiteResult equivalence(std::uint64_t seed) {
  SuiteResult r{"equivalence", true, 0.0, 1e-9, 0, {}};
  std::mt19937_64 rng(derive_seed(seed, 1));
  std::uniform_real_distribution<double> point(-1.0, 1.0);
  double most_negative = 0.0;
  for (const auto& d : imaginary_designs()) {
    ++r.cases;
    if (!d.certificate.certified()) {
      r.passed = false;
      r.detail += "uncertified n=" + std::to_string(d.n) + " z0=" + std::to_string(d.z0.imag()) + "i; ";
    }
    for (double m : d.certificate.on_support_moduli) r.worst = std::max(r.worst, std::abs(m - 1.0));
    for (int s = 0; s < 100; ++s) {
      const double deriv = directional_derivative_K(d.measure, point(rng), d.n, d.z0);
      most_negative = std::min(most_negative, deriv);
    }
  }
  if (most_negative < -r.threshold) r.passed = false;
  if (r.worst > r.threshold) r.passed = false;
  std::ostringstream msg;
  msg << "min directional derivative " << most_negative << ", worst |P| - 1 on support " << r.worst;
  r.detail += msg.str();
  r.worst = std::max(r.worst, -most_negative);
  return r;
}

SuiteResult duality(std::uint64_t seed) {
  SuiteResult r{"duality", true, 0.0, 1e-8, 0, {}};
  std::vector<Design> designs = imaginary_designs();
  OptimizerOptions opts;
  opts.seed = seed;
  for (cplx z0 : {cplx(1.5, 0.0), cplx(-3.0, 0.0), cplx(1.0, 1.0), cplx(2.0, 0.5)}) {
    for (int n = 2; n <= 5; ++n) designs.push_back(optimize_support(n, z0, opts));
  }
  double worst_l2 = 0.0;
  int uncertified = 0;
  for (const auto& d : designs) {
    if (!d.certificate.certified()) {
      ++uncertified;
      continue;
    }
    ++r.cases;
    const double pz = std::norm(d.extremal_poly(d.z0));
    r.worst = std::max(r.worst, std::abs(d.K_value - pz) / d.K_value);
    worst_l2 = std::max(worst_l2, std::abs(l2_norm_squared(d.measure, d.extremal_poly) - 1.0));
  }
  r.passed = r.cases > 0 && r.worst <= r.threshold && worst_l2 <= 1e-10;
  std::ostringstream msg;
  msg << r.cases << " certified designs (" << uncertified << " skipped), worst |int |P|^2 dmu - 1| " << worst_l2;
  r.detail = msg.str();
  return r;
}

std::vector<SuiteResult> run(const std::string& suite, std::uint64_t seed) {
  if (suite == "pell") return {pell(seed)};
  if (suite == "equivalence") return {equivalence(seed)};
  if (suite == "duality") return {duality(seed)};
  if (suite == "all") return {pell(seed), equivalence(seed), duality(seed)};
  throw InputError("unknown suite '" + suite + "'");
}

} // namespace optpred::verify
