#pragma once

#include <functional>
#include <optional>

#include "kirchhoff/types.hpp"

namespace kirchhoff {

// A smooth space curve u : [0, L] -> R^3 parametrized by arc length
// (|u'(s)| = 1), described analytically: evaluator, first three derivatives,
// and sup-norm bounds on u'' and u''' used by step-size and bracket guards.
// exact_bend_energy, when present, is the closed form of  ∫_0^L |u''|^2 ds.
struct AnalyticCurve {
  double length = 0.0;
  std::function<Vec3(double)> eval;
  std::function<Vec3(double)> deriv1;
  std::function<Vec3(double)> deriv2;
  std::function<Vec3(double)> deriv3;
  double sup_deriv2 = 0.0;  // sup |u''|
  double sup_deriv3 = 0.0;  // sup |u'''|
  std::optional<double> exact_bend_energy;
};

// A smooth twist angle theta : [0, L] -> R along such a curve.
// exact_tor_energy, when present, is the closed form of  ∫_0^L |theta'|^2 ds.
struct TwistProfile {
  double length = 0.0;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::optional<double> exact_tor_energy;
};

// Straight segment of length L along the x-axis.  Zero curvature.
AnalyticCurve make_line(double L);

// Circular arc of radius R and arc length L in the xy-plane, starting at
// (R, 0, 0) with tangent (0, 1, 0).  Constant curvature 1/R.
AnalyticCurve make_arc(double R, double L);

// Circular helix of radius a and pitch parameter b, arc length L:
//   u(s) = (a cos(s/c), a sin(s/c), b s/c),   c = sqrt(a^2 + b^2).
// Constant curvature a/c^2.
AnalyticCurve make_helix(double a, double b, double L);

// Twist fixtures over [0, L]: identically zero; linear theta(s) = slope * s;
// and theta(s) = sin(s).  All three carry exact torsion energies.
TwistProfile make_zero_twist(double L);
TwistProfile make_linear_twist(double L, double slope = 1.0);
TwistProfile make_sine_twist(double L);

// Continuum elastic energy  ∫ |u''|^2 + ∫ |theta'|^2  over the common domain.
// Uses the exact closed forms when available, otherwise adaptive quadrature
// converged to relative 1e-10 or better.  Throws InvalidInput when the two
// domains disagree.
double continuous_energy(const AnalyticCurve& curve, const TwistProfile& twist);

}  // namespace kirchhoff
