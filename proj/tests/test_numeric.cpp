#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "kirchhoff/numeric.hpp"

using namespace kirchhoff;

TEST_CASE("gauss_legendre nodes are symmetric and weights sum to 2") {
  for (int n : {4, 16, 32, 33}) {
    const QuadratureRule& rule = gauss_legendre(n);
    REQUIRE(static_cast<int>(rule.nodes.size()) == n);
    double weight_sum = 0.0;
    for (int k = 0; k < n; ++k) {
      CHECK(rule.nodes[k] == doctest::Approx(-rule.nodes[n - 1 - k]).epsilon(1e-14));
      CHECK(rule.weights[k] > 0.0);
      weight_sum += rule.weights[k];
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 1; k < n; ++k) CHECK(rule.nodes[k] > rule.nodes[k - 1]);
  }
  CHECK_THROWS_AS(gauss_legendre(0), InvalidInput);
}

TEST_CASE("16-point rule integrates polynomials up to degree 31 exactly") {
  // Oracle: ∫_0^2 x^k dx = 2^(k+1)/(k+1).
  for (int k : {0, 1, 7, 20, 31}) {
    const double exact = std::pow(2.0, k + 1) / (k + 1);
    const double got =
        gl_integrate([k](double x) { return std::pow(x, k); }, 0.0, 2.0, 16);
    CHECK(got == doctest::Approx(exact).epsilon(1e-13));
  }
  // Degree 32 must *not* be exact for a 16-point rule.
  const double got =
      gl_integrate([](double x) { return std::pow(x, 32); }, 0.0, 2.0, 16);
  CHECK(std::abs(got - std::pow(2.0, 33) / 33.0) > 1e-9);
}

TEST_CASE("adaptive_gl16 reaches tight tolerances on smooth integrands") {
  CHECK(adaptive_gl16([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(adaptive_gl16([](double x) { return std::exp(x); }, 0.0, 1.0) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(adaptive_gl16([](double) { return 0.0; }, 0.0, 5.0) == 0.0);
  CHECK(adaptive_gl16([](double x) { return x; }, 1.0, 1.0) == 0.0);
  CHECK_THROWS_AS(adaptive_gl16([](double x) { return x; }, 1.0, 0.0),
                  InvalidInput);
}

TEST_CASE("compensated_sum is immune to classic cancellation order") {
  CHECK(compensated_sum({1e16, 1.0, -1e16}) == 1.0);
  std::vector<double> tenths(100, 0.1);
  CHECK(std::abs(compensated_sum(tenths) - 10.0) <= 1e-14);
  CompensatedAccumulator acc;
  for (int i = 0; i < 1000; ++i) acc.add(0.001);
  CHECK(std::abs(acc.value() - 1.0) <= 1e-13);
}

TEST_CASE("find_root solves bracketed roots to 1e-12") {
  const double root = find_root([](double x) { return std::cos(x); }, 0.0, 2.0,
                                1e-15, 1e-15);
  CHECK(root == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  // Exact zero at an endpoint is returned immediately.
  CHECK(find_root([](double x) { return x - 2.0; }, 0.0, 2.0, 1e-15, 1e-15) ==
        2.0);
  CHECK_THROWS_AS(
      find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12, 1e-12),
      NumericalError);
}

TEST_CASE("find_root handles a steep non-polynomial function") {
  auto f = [](double x) { return std::exp(3.0 * x) - 7.0; };
  const double root = find_root(f, 0.0, 2.0, 1e-14, 1e-14);
  CHECK(root == doctest::Approx(std::log(7.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("golden_min locates a quadratic minimum") {
  const double x = golden_min(
      [](double t) { return (t - 1.234) * (t - 1.234); }, 0.0, 2.0, 1e-10);
  CHECK(x == doctest::Approx(1.234).epsilon(1e-9));
}
