#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>

#include "doctest.h"
#include "kirchhoff/curves.hpp"

using namespace kirchhoff;

namespace {

// Independent test-side oracle: composite Simpson rule, deliberately not the
// library's Gauss-Legendre machinery.
double simpson(const std::function<double(double)>& f, double a, double b,
               int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

// Max norm of d/ds check via central differences of `lower` against `upper`.
double deriv_mismatch(const std::function<Vec3(double)>& lower,
                      const std::function<Vec3(double)>& upper, double L) {
  const double h = 1e-6;
  double worst = 0.0;
  for (int k = 1; k < 40; ++k) {
    const double s = L * k / 40.0;
    const Vec3 fd = (lower(s + h) - lower(s - h)) / (2.0 * h);
    worst = std::max(worst, (fd - upper(s)).norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("line fixture") {
  const AnalyticCurve line = make_line(2.0);
  CHECK(line.length == 2.0);
  CHECK(line.eval(0.5) == Vec3(0.5, 0.0, 0.0));
  CHECK(line.deriv1(1.7) == Vec3(1.0, 0.0, 0.0));
  CHECK(line.deriv2(0.3).norm() == 0.0);
  CHECK(line.sup_deriv2 == 0.0);
  REQUIRE(line.exact_bend_energy.has_value());
  CHECK(*line.exact_bend_energy == 0.0);
  CHECK_THROWS_AS(make_line(0.0), InvalidInput);
  CHECK_THROWS_AS(make_line(-1.0), InvalidInput);
}

TEST_CASE("arc fixture is unit speed with curvature 1/R") {
  const double R = 0.7, L = 2.5;
  const AnalyticCurve arc = make_arc(R, L);
  for (int k = 0; k <= 10; ++k) {
    const double s = L * k / 10.0;
    CHECK(arc.eval(s).norm() == doctest::Approx(R).epsilon(1e-14));
    CHECK(arc.deriv1(s).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(arc.deriv2(s).norm() == doctest::Approx(1.0 / R).epsilon(1e-14));
  }
  CHECK(arc.eval(0.0) == Vec3(R, 0.0, 0.0));
  CHECK((arc.deriv1(0.0) - Vec3(0.0, 1.0, 0.0)).norm() < 1e-15);
  CHECK(deriv_mismatch(arc.eval, arc.deriv1, L) < 1e-8);
  CHECK(deriv_mismatch(arc.deriv1, arc.deriv2, L) < 1e-8);
  CHECK(deriv_mismatch(arc.deriv2, arc.deriv3, L) < 1e-8);
  CHECK(arc.sup_deriv2 == doctest::Approx(1.0 / R).epsilon(1e-15));
  CHECK_THROWS_AS(make_arc(0.0, 1.0), InvalidInput);
}

TEST_CASE("arc closed-form bending energy matches the Simpson oracle") {
  // Oracle for R = 1, L = pi: ∫ |u''|^2 = pi (frozen).
  const AnalyticCurve arc = make_arc(1.0, M_PI);
  REQUIRE(arc.exact_bend_energy.has_value());
  CHECK(*arc.exact_bend_energy == doctest::Approx(M_PI).epsilon(1e-15));
  const double oracle = simpson(
      [&arc](double s) { return arc.deriv2(s).squaredNorm(); }, 0.0, M_PI,
      2000);
  CHECK(*arc.exact_bend_energy == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("helix fixture is unit speed with constant curvature a/c^2") {
  const double a = 1.0, b = 1.0, L = 4.0;
  const double c2 = a * a + b * b;
  const AnalyticCurve helix = make_helix(a, b, L);
  for (int k = 0; k <= 10; ++k) {
    const double s = L * k / 10.0;
    CHECK(helix.deriv1(s).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(helix.deriv2(s).norm() == doctest::Approx(a / c2).epsilon(1e-14));
  }
  CHECK(deriv_mismatch(helix.eval, helix.deriv1, L) < 1e-8);
  CHECK(deriv_mismatch(helix.deriv1, helix.deriv2, L) < 1e-8);
  CHECK(deriv_mismatch(helix.deriv2, helix.deriv3, L) < 1e-8);

  // Oracle: Simpson on |u''|^2; for a = b = 1, L = 4 the closed form is
  // L a^2 / c^4 = 1 (frozen).
  REQUIRE(helix.exact_bend_energy.has_value());
  CHECK(*helix.exact_bend_energy == doctest::Approx(1.0).epsilon(1e-15));
  const double oracle = simpson(
      [&helix](double s) { return helix.deriv2(s).squaredNorm(); }, 0.0, L,
      2000);
  CHECK(*helix.exact_bend_energy == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("twist fixtures carry correct exact energies") {
  const TwistProfile zero = make_zero_twist(3.0);
  CHECK(zero.eval(1.0) == 0.0);
  CHECK(*zero.exact_tor_energy == 0.0);

  const TwistProfile linear = make_linear_twist(3.0, 0.5);
  CHECK(linear.eval(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(linear.deriv(0.4) == 0.5);
  CHECK(*linear.exact_tor_energy == doctest::Approx(0.25 * 3.0).epsilon(1e-15));

  // Oracle: Simpson on cos^2 over [0, 4] vs the closed form L/2 + sin(2L)/4.
  const TwistProfile sine = make_sine_twist(4.0);
  CHECK(sine.eval(1.3) == doctest::Approx(std::sin(1.3)).epsilon(1e-15));
  CHECK(sine.deriv(1.3) == doctest::Approx(std::cos(1.3)).epsilon(1e-15));
  const double oracle = simpson(
      [&sine](double s) { return sine.deriv(s) * sine.deriv(s); }, 0.0, 4.0,
      2000);
  CHECK(*sine.exact_tor_energy == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("continuous_energy of the straight line with sine twist is pi") {
  // Frozen: ∫_0^{2pi} cos^2 = pi, bending contributes nothing.
  const double L = 2.0 * M_PI;
  const double got = continuous_energy(make_line(L), make_sine_twist(L));
  CHECK(got == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("continuous_energy quadrature path agrees with the closed forms") {
  AnalyticCurve helix = make_helix(1.0, 1.0, 4.0);
  TwistProfile sine = make_sine_twist(4.0);
  const double exact = continuous_energy(helix, sine);
  helix.exact_bend_energy.reset();
  sine.exact_tor_energy.reset();
  const double quadrature = continuous_energy(helix, sine);
  CHECK(quadrature == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("continuous_energy rejects mismatched domains") {
  CHECK_THROWS_AS(continuous_energy(make_line(1.0), make_zero_twist(2.0)),
                  InvalidInput);
}
