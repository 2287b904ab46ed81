#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "optpred/design.hpp"
#include "optpred/errors.hpp"
#include "optpred/imaginary.hpp"
#include "optpred/measure.hpp"

using namespace optpred;

namespace {

DiscreteMeasure uniform3() { return DiscreteMeasure(NodeSet({-1.0, 0.0, 1.0}), {1.0 / 3, 1.0 / 3, 1.0 / 3}); }

cplx random_exterior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(1.2, 3.0), th(0.0, 2.0 * M_PI);
  return std::polar(r(rng), th(rng));
}

} // namespace

TEST_CASE("DiscreteMeasure validation") {
  CHECK_THROWS_AS(DiscreteMeasure(NodeSet({-1.0, 1.0}), {0.5}), InputError);
  CHECK_THROWS_AS(DiscreteMeasure(NodeSet({-1.0, 1.0}), {1.5, -0.5}), InputError);
  CHECK_THROWS_AS(DiscreteMeasure(NodeSet({-1.0, 1.0}), {0.5, 0.6}), InputError);
  const DiscreteMeasure mu(NodeSet({-1.0, 0.5, 1.0}), {0.2, 0.3, 0.5});
  const auto r = mu.reflected();
  CHECK(r.nodes()[1] == -0.5);
  CHECK(r.weights()[0] == doctest::Approx(0.5));
}

TEST_CASE("gram examples") {
  const DiscreteMeasure two(NodeSet({-1.0, 1.0}), {0.5, 0.5});
  CHECK((gram(two, 1).entries - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);

  const auto g = gram(uniform3(), 2);
  CHECK(std::abs(g.entries(0, 2) - cplx(1.0 / 3)) < 1e-15);
  CHECK((g.entries - g.entries.adjoint()).norm() < 1e-14);

  std::mt19937_64 rng(31);
  const DiscreteMeasure random(NodeSet(oracle::random_nodes(rng, 5)), oracle::random_weights(rng, 5));
  const auto g0 = gram(random, 0);
  CHECK(g0.entries.rows() == 1);
  CHECK(std::abs(g0.entries(0, 0) - 1.0) < 1e-14);
}

TEST_CASE("christoffel examples") {
  const DiscreteMeasure hl(NodeSet({-1.0, 0.0, 1.0}), {1.0 / 7, 3.0 / 7, 3.0 / 7});
  CHECK(christoffel(hl, 2, 2.0).value == doctest::Approx(49.0).epsilon(1e-12));
  CHECK(christoffel(uniform3(), 2, 2.0).value == doctest::Approx(57.0).epsilon(1e-12));
  CHECK(christoffel_lagrange(uniform3(), 2.0) == doctest::Approx(57.0).epsilon(1e-12));

  std::mt19937_64 rng(32);
  const auto x = oracle::random_nodes(rng, 6);
  const auto w = oracle::random_weights(rng, 6);
  const DiscreteMeasure mu(NodeSet(x), w);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(christoffel(mu, 5, x[i]).value == doctest::Approx(1.0 / w[i]).epsilon(1e-9));
  }
}

TEST_CASE("christoffel rejects rank-deficient Gram matrices") {
  const DiscreteMeasure two(NodeSet({-1.0, 1.0}), {0.5, 0.5});
  CHECK_THROWS_AS(christoffel(two, 2, cplx(0.0, 1.0)), RankDeficiencyError);
  CHECK_THROWS_AS(kernel_poly(two, 3, 2.0), RankDeficiencyError);
}

TEST_CASE("Gram and Lagrange paths agree") {
  std::mt19937_64 rng(33);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t count = 2 + trial % 8;
    const auto x = oracle::random_nodes(rng, count, 0.1);
    const auto w = oracle::random_weights(rng, count);
    const cplx z0 = random_exterior(rng);
    const double gram_path = christoffel(DiscreteMeasure(NodeSet(x), w), static_cast<int>(count) - 1, z0).value;
    const double brute = oracle::lagrange_K(x, w, z0);
    worst = std::max(worst, std::abs(gram_path - brute) / brute);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("variational lower bound") {
  std::mt19937_64 rng(34);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t count = 3 + trial % 8;
    const int n = static_cast<int>(count) - 1 - trial % 2;
    const DiscreteMeasure mu(NodeSet(oracle::random_nodes(rng, count, 0.08)), oracle::random_weights(rng, count));
    const cplx z0 = random_exterior(rng);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = cplx(g(rng), g(rng));
    ComplexPoly p(std::move(c));
    p *= 1.0 / sup_norm_interval(p).value;
    const double k = christoffel(mu, n, z0).value;
    const double lhs = std::norm(p(z0));
    CHECK(lhs <= k * l2_norm_squared(mu, p) * (1.0 + 1e-9) + 1e-9);
  }
}

TEST_CASE("kernel_poly examples") {
  const DiscreteMeasure two(NodeSet({-1.0, 1.0}), {0.5, 0.5});
  for (double a : {0.5, 1.0, 3.0}) {
    const double s = std::sqrt(a * a + 1.0);
    const ComplexPoly expected{cplx(1.0 / s), cplx(0.0, -a / s)};
    CHECK(max_coeff_distance(kernel_poly(two, 1, cplx(0.0, a)), expected) <= 1e-14);
  }

  // Hoel-Levine weights for z0 = 2: |ell| = (1/2, 3/2).
  const DiscreteMeasure hl(NodeSet({-1.0, 1.0}), {0.25, 0.75});
  CHECK(max_coeff_distance(kernel_poly(hl, 1, 2.0), ComplexPoly{cplx(0.0), cplx(1.0)}) <= 1e-14);

  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t count = 3 + trial % 7;
    const DiscreteMeasure mu(NodeSet(oracle::random_nodes(rng, count, 0.08)), oracle::random_weights(rng, count));
    const cplx z0 = random_exterior(rng);
    const int n = static_cast<int>(count) - 1 - trial % 2;
    const auto p = kernel_poly(mu, n, z0);
    CHECK(l2_norm_squared(mu, p) == doctest::Approx(1.0).epsilon(1e-10));
    // P(z0) = sqrt(K) is real and positive.
    const cplx pz = p(z0);
    const double k = christoffel(mu, n, z0).value;
    CHECK(std::abs(pz.imag()) <= 1e-9 * std::sqrt(k));
    CHECK(pz.real() == doctest::Approx(std::sqrt(k)).epsilon(1e-9));
  }

  CHECK_THROWS_AS(kernel_poly(uniform3(), 2, 0.0), DomainError);
}

TEST_CASE("kernel_poly is extremal whenever its sup norm is at most 1") {
  std::mt19937_64 rng(36);
  std::normal_distribution<double> g;
  for (auto [n, a] : {std::pair{3, 1.0}, std::pair{5, 0.25}, std::pair{6, 4.0}}) {
    const auto d = imaginary::imaginary_design(n, a);
    const cplx z0(0.0, a);
    const auto big_p = kernel_poly(d.measure, n, z0);
    REQUIRE(sup_norm_interval(big_p).value <= 1.0 + 1e-10);
    const double best = std::abs(big_p(z0));
    double sampled = 0.0;
    for (int s = 0; s < 1000; ++s) {
      std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
      for (auto& v : c) v = cplx(g(rng), g(rng));
      ComplexPoly p(std::move(c));
      sampled = std::max(sampled, std::abs(p(z0)) / sup_norm_interval(p).value);
    }
    CHECK(sampled <= best * (1.0 + 1e-9));
  }
}

TEST_CASE("directional derivative formula") {
  // Uniform measure on {-1, 0, 1}, a = 0.5, n = 2, z0 = 2.
  const double formula = directional_derivative_K(uniform3(), 0.5, 2, 2.0);
  const double fd = oracle::fd_derivative_K(uniform3(), 0.5, 2, 2.0, 1e-6);
  CHECK(std::abs(formula - fd) <= 1e-5 * std::abs(fd));

  // Vanishes on the support of an optimal design, nonnegative elsewhere.
  const auto d = imaginary::imaginary_design(2, 1.0);
  for (double x : d.measure.nodes()) {
    CHECK(std::abs(directional_derivative_K(d.measure, x, 2, d.z0)) <= 1e-9 * d.K_value);
  }
  for (double x : {-0.8, -0.3, 0.4, 0.9}) CHECK(directional_derivative_K(d.measure, x, 2, d.z0) >= 0.0);

  // Central differences with step h need h K_n^mu(a, a) << 1 (t -> K is
  // singular at t ~ -1 / K_n^mu(a, a)), so the random measures use jittered
  // Chebyshev supports with weights bounded away from zero.
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> point(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t count = 3 + trial % 6;
    const DiscreteMeasure mu(NodeSet(oracle::jittered_nodes(rng, count)), oracle::random_weights(rng, count));
    const cplx z0 = random_exterior(rng);
    const int n = static_cast<int>(count) - 1;
    const double a = point(rng);
    const double formula_r = directional_derivative_K(mu, a, n, z0);
    const double fd_r = oracle::fd_derivative_K(mu, a, n, z0, 1e-6);
    CHECK(std::abs(formula_r - fd_r) <= 1e-5 * std::abs(fd_r));
  }
}

TEST_CASE("hermitian_cholesky") {
  const auto g = gram(uniform3(), 2).entries;
  const auto l = hermitian_cholesky(g);
  CHECK((l * l.adjoint() - g).norm() < 1e-14);
  CHECK(l(0, 1) == cplx(0.0));
  CHECK_THROWS_AS(hermitian_cholesky(gram(uniform3(), 3).entries), RankDeficiencyError);
}
