#include "optpred/imaginary.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "optpred/chebyshev.hpp"
#include "optpred/errors.hpp"

namespace optpred::imaginary {

namespace {

constexpr cplx kI(0.0, 1.0);

void require_positive(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("a must be positive (got " + std::to_string(a) + "); reflect for a < 0");
  }
}

void require_nonzero(double a) {
  if (a == 0.0 || !std::isfinite(a)) throw DomainError("a must be finite and nonzero");
}

void require_degree(int n, int lowest) {
  if (n < lowest || n > chebyshev::kMaxDegree) throw DomainError("degree " + std::to_string(n) + " out of range");
}

ComplexPoly advance(ComplexPoly first, ComplexPoly second, int steps) {
  for (int k = 0; k < steps; ++k) {
    ComplexPoly next = second.times_z() * cplx(2.0) - first;
    first = std::move(second);
    second = std::move(next);
  }
  return second;
}

} // namespace

ComplexPoly q_poly(int n, double a) {
  require_positive(a);
  require_degree(n, 1);
  const double s = std::hypot(a, 1.0);
  // In the Chebyshev basis z^2 = (T_0 + T_2) / 2.
  ComplexPoly q1{-kI / s, cplx(-a / s)};
  ComplexPoly q2{cplx((s - 0.5 * (a + s)) / s), -kI / s, cplx(-0.5 * (a + s) / s)};
  if (n == 1) return q1;
  return advance(std::move(q1), std::move(q2), n - 2);
}

ComplexPoly r_poly(int n, double a) {
  require_positive(a);
  require_degree(n, 0);
  const double s = std::hypot(a, 1.0);
  ComplexPoly r0{cplx(a / s)};
  ComplexPoly r1{cplx(0.0), cplx((a + s) / s)};
  if (n == 0) return r0;
  return advance(std::move(r0), std::move(r1), n - 1);
}

double pell_residual(int n, double a, double x) {
  const double q = std::norm(q_poly(n, a)(x));
  const double r = r_poly(n - 1, a)(x).real();
  return std::abs(q - (x * x - 1.0) * r * r - 1.0);
}

std::vector<double> r_zeros(int m, double a) {
  if (m == 0) return {};
  const auto extremes = chebyshev_extreme_points(m);
  std::vector<std::pair<double, double>> brackets;
  for (std::size_t k = 0; k + 1 < extremes.size(); ++k) brackets.emplace_back(extremes[k], extremes[k + 1]);
  return real_roots_bracketed(r_poly(m, a), brackets);
}

Design imaginary_design(int n, double a) {
  require_nonzero(a);
  require_degree(n, 1);
  std::vector<double> nodes{-1.0};
  for (double x : r_zeros(n - 1, std::abs(a))) nodes.push_back(x);
  nodes.push_back(1.0);
  NodeSet support(std::move(nodes));
  if (a < 0.0) support = support.reflected();
  return make_design(support, cplx(0.0, a));
}

double growth_value(int n, double a) {
  require_nonzero(a);
  require_degree(n, 1);
  const double s = std::hypot(a, 1.0);
  return s * std::pow(std::abs(a) + s, n - 1);
}

double optimal_K(int n, double a) {
  const double g = growth_value(n, a);
  return g * g;
}

GrowthGap growth_gap(int n, double a) {
  const double s = std::hypot(a, 1.0);
  const double tn = std::abs(chebyshev::T(n, cplx(0.0, a)));
  const double tn1 = std::abs(chebyshev::T(n - 1, cplx(0.0, a)));
  return {growth_value(n, a) - tn, (s - std::abs(a)) * tn1};
}

} // namespace optpred::imaginary
