#pragma once

#include <optional>
#include <vector>

#include "kirchhoff/curves.hpp"
#include "kirchhoff/rod.hpp"
#include "kirchhoff/types.hpp"

namespace kirchhoff {

// Result of marching equal chords of length `radius` along a curve:
// params = (s_0 = 0, s_1, ..., s_N) are the arc-length parameters of the
// chain vertices.  `terminated` is true when a positive remainder of the
// curve was left uncovered (the next chord would overshoot the endpoint).
struct ChordWalk {
  double radius = 0.0;
  std::vector<double> params;
  bool terminated = false;

  int segment_count() const { return static_cast<int>(params.size()) - 1; }
};

// Smallest s > s_prev with |u(s) - u(s_prev)| = r, or nullopt when no such s
// exists in [s_prev, L].  Requires the small-chord regime
// r * sup|u''| < 1, in which the chord length grows strictly along the curve
// and the crossing is unique.  Brackets by marching r/4 at a time, then
// solves with a hybrid secant/bisection iteration to 1e-13.
std::optional<double> step(const AnalyticCurve& curve, double s_prev, double r);

// Full equal-chord walk from s = 0 with chord length r in (0, L].
ChordWalk count_segments(const AnalyticCurve& curve, double r);

// The chord length r_N for which N equal chords land exactly on u(L):
// bisection of  s_N(r) - L  over [L/N * (1 - (L/N)^2 sup|u'''|), L/N]
// to absolute tolerance 1e-12.  Requires (L/N) * sup|u''| < 1.
double solve_rN(const AnalyticCurve& curve, int N);

// Equal-chord recovery discretization: vertices x_i = u(s_i) for the
// solve_rN walk (the endpoint parameter snapped to exactly L), material
// angles phi_i = theta evaluated at each chord's arc midpoint.  When
// radius_out is non-null it receives the solved chord length.
FramedDiscreteRod recovery_rod(const AnalyticCurve& curve,
                               const TwistProfile& twist, int N,
                               double* radius_out = nullptr);

}  // namespace kirchhoff
