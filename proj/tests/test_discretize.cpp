#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "kirchhoff/discretize.hpp"

using namespace kirchhoff;

namespace {

// Chord length of the helix (a cos(s/c), a sin(s/c), b s/c) across an
// arc-length gap l, with c = sqrt(a^2 + b^2).
double helix_chord(double a, double b, double l) {
  const double c = std::sqrt(a * a + b * b);
  const double swing = 2.0 * a * std::sin(0.5 * l / c);
  const double rise = b * l / c;
  return std::sqrt(swing * swing + rise * rise);
}

// Inverse of helix_chord by bisection; the chord grows monotonically in the
// small-chord regime used by the tests.
double helix_gap(double a, double b, double r) {
  double lo = 0.0, hi = 4.0 * r;
  while (helix_chord(a, b, hi) < r) hi *= 2.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (helix_chord(a, b, mid) < r ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("single chord steps along a straight line") {
  const AnalyticCurve line = make_line(1.0);
  auto s1 = step(line, 0.0, 0.25);
  REQUIRE(s1.has_value());
  CHECK(*s1 == doctest::Approx(0.25).epsilon(1e-12));

  auto s2 = step(line, 0.3, 0.25);
  REQUIRE(s2.has_value());
  CHECK(*s2 == doctest::Approx(0.55).epsilon(1e-12));

  // From 0.9 the remaining 0.1 of curve cannot host a 0.25 chord.
  CHECK(!step(line, 0.9, 0.25).has_value());
}

TEST_CASE("chord step input validation") {
  const AnalyticCurve arc = make_arc(1.0, M_PI);
  CHECK_THROWS_AS(step(arc, 0.0, 1.5), InvalidInput);   // r * sup|u''| >= 1
  CHECK_THROWS_AS(step(arc, -0.1, 0.2), InvalidInput);
  CHECK_THROWS_AS(step(arc, 4.0, 0.2), InvalidInput);
  CHECK_THROWS_AS(step(arc, 0.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(step(arc, 0.0, -0.2), InvalidInput);

  const AnalyticCurve line = make_line(1.0);
  CHECK_THROWS_AS(count_segments(line, 1.5), InvalidInput);  // r > L
}

TEST_CASE("chord steps on a circle match the arcsine closed form") {
  const double radius = 2.0;
  const AnalyticCurve arc = make_arc(radius, 3.0);
  std::mt19937_64 rng(401u);
  std::uniform_real_distribution<double> start(0.0, 1.5);
  std::uniform_real_distribution<double> chord(0.05, 0.8);
  for (int trial = 0; trial < 40; ++trial) {
    const double s0 = start(rng);
    const double r = chord(rng);
    const auto s1 = step(arc, s0, r);
    REQUIRE(s1.has_value());
    const double expected = s0 + 2.0 * radius * std::asin(0.5 * r / radius);
    CHECK(std::abs(*s1 - expected) <= 1e-12);
  }
}

TEST_CASE("chord steps on a helix match a test-side inversion") {
  const double a = 1.0, b = 0.5;
  const AnalyticCurve helix = make_helix(a, b, 6.0);
  std::mt19937_64 rng(402u);
  std::uniform_real_distribution<double> start(0.0, 3.0);
  std::uniform_real_distribution<double> chord(0.05, 0.6);
  for (int trial = 0; trial < 40; ++trial) {
    const double s0 = start(rng);
    const double r = chord(rng);
    const auto s1 = step(helix, s0, r);
    REQUIRE(s1.has_value());
    CHECK(std::abs(*s1 - (s0 + helix_gap(a, b, r))) <= 1e-10);
  }
}

TEST_CASE("full walk along a line counts chords and leftover") {
  const AnalyticCurve line = make_line(1.0);

  const ChordWalk tight = count_segments(line, 0.26);
  CHECK(tight.segment_count() == 3);
  CHECK(tight.terminated);  // 0.22 of curve left uncovered
  REQUIRE(tight.params.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(tight.params[i] == doctest::Approx(0.26 * i).epsilon(1e-12));

  const ChordWalk exact = count_segments(line, 0.25);
  CHECK(exact.segment_count() == 4);
  CHECK(!exact.terminated);
  CHECK(exact.params.back() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("full walk along an arc advances in equal parameter increments") {
  const AnalyticCurve arc = make_arc(1.0, 2.0);
  const double r = 0.3;
  const ChordWalk walk = count_segments(arc, r);
  REQUIRE(walk.segment_count() >= 2);
  const double expected = 2.0 * std::asin(0.5 * r);
  for (int i = 1; i <= walk.segment_count(); ++i)
    CHECK(std::abs(walk.params[i] - walk.params[i - 1] - expected) <= 1e-10);
  const double remainder = 2.0 - walk.params.back();
  CHECK(walk.terminated == (remainder > 1e-12 * 2.0));
}

TEST_CASE("chord count never grows with the chord length") {
  const AnalyticCurve helix = make_helix(1.0, 1.0, 5.0);
  int previous = 1 << 30;
  for (double r : {0.05, 0.08, 0.13, 0.21, 0.34, 0.55}) {
    const int count = count_segments(helix, r).segment_count();
    CHECK(count <= previous);
    previous = count;
  }
}

TEST_CASE("exact-fit chord length on the three reference curves") {
  const AnalyticCurve line = make_line(2.0);
  CHECK(std::abs(solve_rN(line, 7) - 2.0 / 7.0) <= 1e-12);

  const AnalyticCurve arc = make_arc(1.0, M_PI);
  CHECK(std::abs(solve_rN(arc, 16) - 2.0 * std::sin(M_PI / 32.0)) <= 1e-10);

  const double a = 1.0, b = 1.0, length = 4.0;
  const AnalyticCurve helix = make_helix(a, b, length);
  for (int n : {8, 12, 20}) {
    const double r = solve_rN(helix, n);
    CHECK(std::abs(r - helix_chord(a, b, length / n)) <= 1e-10);
    // A chord is never longer than its arc, and the cubic defect bound
    // caps how much shorter it can be.
    const double h = length / n;
    CHECK(r <= h + 1e-12);
    CHECK(r >= h - h * h * h * helix.sup_deriv3 / 6.0 - 1e-12);
  }

  CHECK_THROWS_AS(solve_rN(line, 1), InvalidInput);
  CHECK_THROWS_AS(solve_rN(arc, 2), InvalidInput);  // h sup|u''| = pi/2 >= 1
}

TEST_CASE("recovery chain has equal chords and lands on the far endpoint") {
  const AnalyticCurve helix = make_helix(1.0, 1.0, 4.0);
  const TwistProfile twist = make_zero_twist(4.0);
  double r = 0.0;
  const FramedDiscreteRod framed = recovery_rod(helix, twist, 10, &r);
  const DiscreteRod& rod = framed.rod;

  REQUIRE(rod.segment_count() == 10);
  CHECK((rod.point(0) - helix.eval(0.0)).norm() == 0.0);
  CHECK((rod.point(10) - helix.eval(4.0)).norm() == 0.0);
  for (double chord : chord_lengths(rod))
    CHECK(std::abs(chord - r) <= 1e-9);

  // Chords undercut arcs, so the recovered rod is never longer than the
  // curve.
  CHECK(partition(rod, 4.0).lambda <= 1.0 + 1e-12);
  for (double angle : framed.angles) CHECK(angle == 0.0);
}

TEST_CASE("recovery chain samples the twist at chord midpoints") {
  const double length = 3.0;
  const AnalyticCurve line = make_line(length);
  const TwistProfile twist = make_linear_twist(length, 1.0);
  const FramedDiscreteRod framed = recovery_rod(line, twist, 6);

  REQUIRE(framed.angles.size() == 6);
  for (int i = 1; i <= 6; ++i) {
    const double mid = (i - 0.5) * length / 6.0;
    CHECK(framed.angles[i - 1] == doctest::Approx(mid).epsilon(1e-12));
  }
  CHECK(partition(framed.rod, length).lambda ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("recovery rejects mismatched twist domains") {
  const AnalyticCurve helix = make_helix(1.0, 1.0, 4.0);
  CHECK_THROWS_AS(recovery_rod(helix, make_zero_twist(3.0), 8), InvalidInput);

  TwistProfile hollow = make_zero_twist(4.0);
  hollow.eval = nullptr;
  CHECK_THROWS_AS(recovery_rod(helix, hollow, 8), InvalidInput);
}
