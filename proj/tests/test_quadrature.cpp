#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace wigner;

TEST_CASE("legendre rule integrates low powers exactly") {
  const QuadRule rule = gauss_legendre(8);
  double w_sum = 0.0;
  double x2 = 0.0;
  double x4 = 0.0;
  double x7 = 0.0;
  for (int i = 0; i < 8; ++i) {
    w_sum += rule.weights[i];
    x2 += rule.weights[i] * std::pow(rule.nodes[i], 2);
    x4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
    x7 += rule.weights[i] * std::pow(rule.nodes[i], 7);
  }
  CHECK(w_sum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x4 == doctest::Approx(2.0 / 5.0).epsilon(1e-14));
  CHECK(std::abs(x7) < 1e-15);
}

TEST_CASE("legendre rule is exact through degree 2n-1") {
  const QuadRule rule = gauss_legendre(5);
  double x8 = 0.0;
  for (int i = 0; i < 5; ++i) x8 += rule.weights[i] * std::pow(rule.nodes[i], 8);
  CHECK(x8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("legendre nodes are symmetric") {
  const QuadRule rule = gauss_legendre(7);
  for (int i = 0; i < 7; ++i) {
    CHECK(rule.nodes[i] == -rule.nodes[6 - i]);
    CHECK(rule.weights[i] == rule.weights[6 - i]);
  }
  CHECK(rule.nodes[3] == 0.0);
}

TEST_CASE("hermite rule reproduces gaussian moments") {
  const HermiteRule rule = gauss_hermite(10);
  double w_sum = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < 10; ++i) {
    w_sum += rule.weights[i];
    m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  }
  const double root_pi = std::sqrt(std::numbers::pi);
  CHECK(w_sum == doctest::Approx(root_pi).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(root_pi / 2).epsilon(1e-13));
}

TEST_CASE("modified weights integrate decaying integrands directly") {
  // integral of x^2 e^{-x^2} without evaluating the weight factor
  const HermiteRule rule = gauss_hermite(12);
  double m2 = 0.0;
  for (int i = 0; i < 12; ++i) {
    const double x = rule.nodes[i];
    m2 += rule.modified_weights[i] * x * x * std::exp(-x * x);
  }
  CHECK(m2 == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
}

TEST_CASE("normalized hermite functions are orthonormal under the rule") {
  const HermiteRule rule = gauss_hermite(16);
  for (int m = 0; m <= 6; ++m)
    for (int n = m; n <= 6; ++n) {
      double acc = 0.0;
      for (int i = 0; i < 16; ++i)
        acc += rule.modified_weights[i] *
               hermite_normalized(m, rule.nodes[i]) *
               hermite_normalized(n, rule.nodes[i]);
      CHECK(acc == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-11).scale(1.0));
    }
}

TEST_CASE("normalized ground mode is the gaussian bell") {
  const double x = 0.7;
  CHECK(hermite_normalized(0, x) ==
        doctest::Approx(std::pow(std::numbers::pi, -0.25) *
                        std::exp(-0.5 * x * x))
            .epsilon(1e-14));
}

TEST_CASE("composite axis integrates oscillatory integrands") {
  const PanelAxis axis = composite_axis(3.0, 10.0, 6.0);
  double one = 0.0;
  double wave = 0.0;
  for (std::size_t i = 0; i < axis.nodes.size(); ++i) {
    one += axis.weights[i];
    wave += axis.weights[i] * std::cos(6.0 * axis.nodes[i]);
  }
  CHECK(one == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(wave == doctest::Approx(2.0 * std::sin(18.0) / 6.0).epsilon(1e-12));
}

TEST_CASE("composite axis refuses absurd panel counts") {
  CHECK_THROWS_AS(composite_axis(1e6, 1e-3, 1e3), std::length_error);
  CHECK_THROWS_AS(composite_axis(-1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("rules validate their sizes") {
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_normalized(-1, 0.0), std::invalid_argument);
}
