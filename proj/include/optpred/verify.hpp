#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace optpred::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  ///< worst residual, in the units of the suite's threshold
  double threshold = 0.0;
  int cases = 0;
  std::string detail;
};

/// 10^4 random (n <= 20, a in (0, 10], x in [-1, 1]); passes when the worst
/// residual of the imaginary-point Pell identity is <= 1e-9.
SuiteResult pell(std::uint64_t seed);

/// Closed-form imaginary designs (n <= 8, a in {0.25, 1, 4}) must certify,
/// with directional derivatives >= -1e-9 at 100 random points each.
SuiteResult equivalence(std::uint64_t seed);

/// On every certified design (closed-form and optimized), K = |P(z0)|^2 to
/// rel. 1e-8 and sum_k w_k |P(x_k)|^2 = 1 to 1e-10.
SuiteResult duality(std::uint64_t seed);

/// "pell", "equivalence", "duality" or "all".
std::vector<SuiteResult> run(const std::string& suite, std::uint64_t seed);

} // namespace optpred::verify
