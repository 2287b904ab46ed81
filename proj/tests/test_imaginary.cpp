#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "optpred/chebyshev.hpp"
#include "optpred/errors.hpp"
#include "optpred/imaginary.hpp"

using namespace optpred;
using namespace optpred::imaginary;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const cplx I(0.0, 1.0);

} // namespace

TEST_CASE("q_poly examples") {
  const ComplexPoly q1 = ComplexPoly::from_monomial(std::vector<cplx>{-I / kSqrt2, cplx(-1.0 / kSqrt2)});
  CHECK(max_coeff_distance(q_poly(1, 1.0), q1) <= 1e-15);
  const ComplexPoly q2 = ComplexPoly::from_monomial(std::vector<cplx>{cplx(1.0), -I / kSqrt2, cplx(-(1.0 + kSqrt2) / kSqrt2)});
  CHECK(max_coeff_distance(q_poly(2, 1.0), q2) <= 1e-15);

  ComplexPoly q3 = q2.times_z();
  q3 *= 2.0;
  q3 -= q1;
  CHECK(max_coeff_distance(q_poly(3, 1.0), q3) <= 1e-15);

  CHECK_THROWS_AS(q_poly(2, 0.0), DomainError);
  CHECK_THROWS_AS(q_poly(2, -1.0), DomainError);
  CHECK_THROWS_AS(q_poly(0, 1.0), DomainError);
}

TEST_CASE("r_poly examples") {
  CHECK(max_coeff_distance(r_poly(0, 1.0), ComplexPoly{cplx(1.0 / kSqrt2)}) <= 1e-15);
  CHECK(max_coeff_distance(r_poly(1, 1.0), ComplexPoly{cplx(0.0), cplx((1.0 + kSqrt2) / kSqrt2)}) <= 1e-15);
  const ComplexPoly r2 = ComplexPoly::from_monomial(std::vector<cplx>{cplx(-1.0 / kSqrt2), cplx(0.0), cplx(2.0 * (1.0 + kSqrt2) / kSqrt2)});
  CHECK(max_coeff_distance(r_poly(2, 1.0), r2) <= 1e-15);
  CHECK(r_poly(6, 2.0).max_imag_coeff() == 0.0);
  CHECK_THROWS_AS(r_poly(2, 0.0), DomainError);
  CHECK_THROWS_AS(r_poly(-1, 1.0), DomainError);
}

TEST_CASE("recurrences agree with the closed forms") {
  for (double a : {0.05, 0.25, 1.0, 4.0, 10.0}) {
    for (int n = 1; n <= 20; ++n) {
      CHECK(max_coeff_distance(q_poly(n, a), oracle::closed_form_Q_cheb(n, a)) <= 1e-11);
      if (n <= 8) CHECK(max_coeff_distance(q_poly(n, a), oracle::to_chebyshev(oracle::closed_form_Q(n, a))) <= 1e-11);
    }
    for (int n = 0; n <= 20; ++n) {
      CHECK(max_coeff_distance(r_poly(n, a), oracle::closed_form_R_cheb(n, a)) <= 1e-11);
      if (n <= 8) CHECK(max_coeff_distance(r_poly(n, a), oracle::to_chebyshev(oracle::closed_form_R(n, a))) <= 1e-11);
    }
  }
}

TEST_CASE("pell_residual examples") {
  CHECK(pell_residual(3, 1.0, 1.0) <= 1e-14);
  CHECK(std::abs(q_poly(3, 1.0)(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pell_residual(2, 1.0, 0.0) <= 1e-14);
  CHECK(pell_residual(7, 0.3, 0.42) <= 1e-10);
}

TEST_CASE("Pell identity on random samples") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> deg(1, 20);
  std::uniform_real_distribution<double> x(-1.0, 1.0), u(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < 10000; ++s) {
    const double a = 10.0 * (1.0 - u(rng));
    worst = std::max(worst, pell_residual(deg(rng), a, x(rng)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Q_n has unit sup norm attained at the endpoints and the zeros of R_{n-1}") {
  for (double a : {0.25, 1.0, 4.0}) {
    for (int n = 1; n <= 12; ++n) {
      const auto est = sup_norm_interval(q_poly(n, a), 1e-8);
      CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
      std::vector<double> expected{-1.0};
      for (double z : r_zeros(n - 1, a)) expected.push_back(z);
      expected.push_back(1.0);
      INFO("n = " << n << ", a = " << a);
      REQUIRE(est.near_extreme_points.size() == expected.size());
      for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(std::abs(est.near_extreme_points[k] - expected[k]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("zeros of R_n interlace the extreme points of T_n") {
  for (double a : {0.1, 0.25, 1.0, 4.0, 9.0}) {
    for (int n = 1; n <= 16; ++n) {
      const auto r = r_poly(n, a);
      const auto zeros = r_zeros(n, a);
      REQUIRE(zeros.size() == static_cast<std::size_t>(n));
      for (int k = 0; k <= n; ++k) {
        const double c = std::cos(k * M_PI / n);
        const double v = r(c).real();
        CHECK(v * (k % 2 == 0 ? 1.0 : -1.0) > 0.0);
      }
      for (int k = 0; k < n; ++k) {
        const double hi = std::cos((n - 1 - k) * M_PI / n);
        const double lo = std::cos((n - k) * M_PI / n);
        CHECK(zeros[k] > lo);
        CHECK(zeros[k] < hi);
        CHECK(r(zeros[k] - 1e-12).real() * r(zeros[k] + 1e-12).real() <= 0.0);
      }
    }
  }
}

TEST_CASE("imaginary_design examples") {
  for (double a : {0.5, 1.0, -2.0}) {
    const auto d1 = imaginary_design(1, a);
    CHECK(d1.measure.nodes() == NodeSet({-1.0, 1.0}));
    CHECK(d1.K_value == doctest::Approx(a * a + 1.0).epsilon(1e-14));
    const auto d2 = imaginary_design(2, a);
    REQUIRE(d2.measure.size() == 3);
    CHECK(d2.measure.nodes()[0] == -1.0);
    CHECK(std::abs(d2.measure.nodes()[1]) <= 1e-15);
    CHECK(d2.measure.nodes()[2] == 1.0);
  }
  const auto d3 = imaginary_design(3, 1.0);
  const double root = 1.0 / std::sqrt(2.0 * (1.0 + kSqrt2));
  CHECK(root == doctest::Approx(0.455090).epsilon(1e-6));
  CHECK(d3.measure.nodes()[1] == doctest::Approx(-root).epsilon(1e-14));
  CHECK(d3.measure.nodes()[2] == doctest::Approx(root).epsilon(1e-14));
  CHECK_THROWS_AS(imaginary_design(3, 0.0), DomainError);
  CHECK_THROWS_AS(imaginary_design(0, 1.0), DomainError);
}

TEST_CASE("imaginary designs attain the optimal value") {
  for (double a : {0.25, 1.0, 4.0}) {
    for (int n = 1; n <= 10; ++n) {
      const auto d = imaginary_design(n, a);
      CHECK(d.certificate.certified());
      CHECK(d.K_value == doctest::Approx(optimal_K(n, a)).epsilon(1e-10));
      CHECK(oracle::lagrange_K(std::vector<double>(d.measure.nodes().begin(), d.measure.nodes().end()),
                                  std::vector<double>(d.measure.weights().begin(), d.measure.weights().end()), d.z0) ==
            doctest::Approx(optimal_K(n, a)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Q_n is a rotation of the signed extremal polynomial") {
  for (double a : {0.25, 1.0, 4.0}) {
    for (int n = 1; n <= 8; ++n) {
      const auto d = imaginary_design(n, a);
      ComplexPoly rotated = extremal_signed_poly(d.measure.nodes(), d.z0);
      rotated *= -std::pow(I, n);
      CHECK(max_coeff_distance(q_poly(n, a), rotated) <= 1e-9);
    }
  }
}

TEST_CASE("reflection for negative a") {
  for (double a : {0.25, 1.0, 4.0}) {
    for (int n = 1; n <= 8; ++n) {
      const auto up = imaginary_design(n, a);
      const auto down = imaginary_design(n, -a);
      const std::size_t m = up.measure.size();
      for (std::size_t k = 0; k < m; ++k) CHECK(down.measure.nodes()[k] == -up.measure.nodes()[m - 1 - k]);
      CHECK(down.K_value == doctest::Approx(up.K_value).epsilon(1e-14));
      CHECK(down.certificate.certified());
    }
  }
}

TEST_CASE("the support depends on the point") {
  for (int n = 3; n <= 10; ++n) {
    const auto lo = imaginary_design(n, 0.25).measure.nodes();
    const auto hi = imaginary_design(n, 4.0).measure.nodes();
    double gap = 0.0;
    for (std::size_t k = 1; k + 1 < lo.size(); ++k) gap = std::max(gap, std::abs(lo[k] - hi[k]));
    CHECK(gap > 1e-3);
  }
}

TEST_CASE("growth_value examples") {
  CHECK(growth_value(1, 1.0) == doctest::Approx(kSqrt2).epsilon(1e-15));
  CHECK(growth_value(2, 1.0) == doctest::Approx(kSqrt2 * (1.0 + kSqrt2)).epsilon(1e-15));
  CHECK(growth_value(2, 1.0) == doctest::Approx(3.4142136).epsilon(1e-7));
  CHECK(std::abs(q_poly(2, 1.0)(I)) == doctest::Approx(growth_value(2, 1.0)).epsilon(1e-14));
  for (int n = 1; n <= 10; ++n) CHECK(growth_value(n, 1e-12) == doctest::Approx(1.0).epsilon(1e-10));
  for (double a : {0.25, 1.0, 4.0, -3.0}) {
    for (int n = 1; n <= 15; ++n) {
      const double absa = std::abs(a);
      CHECK(std::abs(q_poly(n, absa)(cplx(0.0, absa))) == doctest::Approx(growth_value(n, a)).epsilon(1e-12));
      CHECK(optimal_K(n, a) == doctest::Approx(growth_value(n, a) * growth_value(n, a)).epsilon(1e-14));
    }
  }
}

TEST_CASE("growth_gap identity") {
  for (double a : {0.3, 1.0, 2.5}) {
    const auto g = growth_gap(1, a);
    const double expected = std::sqrt(a * a + 1.0) - a;
    CHECK(g.lhs == doctest::Approx(expected).epsilon(1e-14));
    CHECK(g.rhs == doctest::Approx(expected).epsilon(1e-14));
  }
  const auto g2 = growth_gap(2, 1.0);
  CHECK(g2.lhs == doctest::Approx(kSqrt2 - 1.0).epsilon(1e-14));
  CHECK(g2.rhs == doctest::Approx(kSqrt2 - 1.0).epsilon(1e-14));

  for (double a : {0.25, 1.0, 2.5, 7.0, -1.5}) {
    for (int n = 1; n <= 20; ++n) {
      const auto g = growth_gap(n, a);
      const double t_n = std::abs(oracle::cheb_T_imag(n, a));
      const double t_m = std::abs(oracle::cheb_T_imag(n - 1, a));
      const double s = std::sqrt(a * a + 1.0);
      CHECK(g.lhs == doctest::Approx(growth_value(n, a) - t_n).epsilon(1e-12));
      CHECK(g.rhs == doctest::Approx((s - std::abs(a)) * t_m).epsilon(1e-12));
      CHECK(std::abs(g.lhs - g.rhs) <= 1e-9 * std::max(1.0, g.rhs));
    }
  }
}
