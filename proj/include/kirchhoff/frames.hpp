#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "kirchhoff/curves.hpp"
#include "kirchhoff/rod.hpp"
#include "kirchhoff/spline.hpp"
#include "kirchhoff/types.hpp"

namespace kirchhoff {

// A right-handed orthonormal basis stored as matrix columns (b1, b2, b3),
// with b1 the tangent direction.
struct Frame {
  Mat3 basis = Mat3::Identity();

  Vec3 b1() const { return basis.col(0); }
  Vec3 b2() const { return basis.col(1); }
  Vec3 b3() const { return basis.col(2); }

  double orthonormality_defect() const {
    return (basis.transpose() * basis - Mat3::Identity()).norm();
  }
  // Throws NumericalError unless the defect is <= 1e-9 and det > 0.
  void validate() const;

  // Deterministic completion of a unit tangent to a full frame: b2 is the
  // coordinate axis with the smallest |tangent| component, projected
  // perpendicular to the tangent and normalized; b3 = b1 x b2.
  static Frame from_tangent(const Vec3& tangent);
};

// Frames attached to an increasing list of parameter values.
struct FrameField {
  std::vector<double> params;
  std::vector<Frame> frames;

  int size() const { return static_cast<int>(params.size()); }
  const Frame& at(int k) const { return frames.at(k); }
};

// Rotation about b1 by angle theta, applied as a right factor: columns
// (b1, b2, b3) -> (b1, b2 cos + b3 sin, -b2 sin + b3 cos).
Mat3 twist_rotation(double theta);

// One frame per edge: the initial frame (whose b1 must align with the first
// edge direction to 1e-7) is carried across each vertex by the rotation that
// maps one unit edge direction to the next about their common perpendicular.
std::vector<Frame> discrete_parallel_transport(const DiscreteRod& rod,
                                               const Frame& initial);

// Rotation-minimizing (Bishop) frame field of a regular parametric curve:
// solves  b' = omega x b,  omega = (y' x y'') / |y'|^2  by fourth-order
// Runge-Kutta with `steps_per_segment` uniform steps inside every breakpoint
// interval.  After each step b1 is replaced by the exact unit tangent and
// b2, b3 re-orthonormalized against it (modified Gram-Schmidt).  A speed
// |y'| below 1e-6 anywhere is a hard error.  `initial` must align with the
// starting tangent to 1e-7; pass Frame::from_tangent for the default.
FrameField integrate_bishop(const std::function<Vec3(double)>& deriv1,
                            const std::function<Vec3(double)>& deriv2,
                            const std::vector<double>& breakpoints,
                            const Frame& initial, int steps_per_segment = 8);

// Convenience overloads: the spline uses its knot vector (caps included) as
// breakpoints; the analytic curve takes an explicit breakpoint list so both
// integrations can share one grid.
FrameField integrate_bishop(const SplineCurve& spline, const Frame& initial,
                            int steps_per_segment = 8);
FrameField integrate_bishop(const AnalyticCurve& curve,
                            const std::vector<double>& breakpoints,
                            const Frame& initial, int steps_per_segment = 8);

// Material frame field: each Bishop frame right-multiplied by the twist
// rotation at its parameter.
FrameField apply_twist(const FrameField& bishop, const TwistFunction& twist);

// Subset of a field at the given parameter values, which must each match a
// stored parameter to within tol (absolute).
FrameField subsample(const FrameField& field, const std::vector<double>& params,
                     double tol);

// min over a common rotation angle theta of  max_k ||F_k * R(theta) - G_k||_F,
// where R is the twist rotation.  Both fields must sample identical parameter
// lists (within 1e-9 absolute).  The per-sample optimal angles seed a coarse
// scan refined by golden-section search to 1e-10.
double frame_distance_mod_rotation(const FrameField& a, const FrameField& b);

// CSV with header t,b1x,b1y,b1z,b2x,b2y,b2z,b3x,b3y,b3z.
void write_frames_csv(const FrameField& field, std::ostream& out);

}  // namespace kirchhoff
