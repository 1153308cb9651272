#pragma once

#include <iosfwd>
#include <vector>

#include "kirchhoff/rod.hpp"
#include "kirchhoff/types.hpp"

namespace kirchhoff {

// One cubic piece S(tau) = cubic*tau^3 + quad*tau^2 + linear*tau + constant
// on the local parameter tau in [0, T].  Built by Hermite matching of
// positions (edge midpoints) and velocities (scaled unit edge directions)
// at both ends.
struct CubicSegment {
  Vec3 cubic = Vec3::Zero();     // A
  Vec3 quad = Vec3::Zero();      // B
  Vec3 linear = Vec3::Zero();    // sigma0 * unit first edge
  Vec3 constant = Vec3::Zero();  // midpoint of the first edge
  double T = 0.0;

  Vec3 eval(double tau) const {
    return constant + tau * (linear + tau * (quad + tau * cubic));
  }
  Vec3 deriv1(double tau) const {
    return linear + tau * (2.0 * quad + tau * 3.0 * cubic);
  }
  Vec3 deriv2(double tau) const { return 2.0 * quad + 6.0 * tau * cubic; }
};

// Hermite fit through three consecutive rod points.  The segment runs from
// the midpoint of [x_prev, x_mid] to the midpoint of [x_mid, x_next], with
// end velocities sigma0 resp. sigma1 times the unit edge directions, over
// local parameter width T.  When the edges are equal chords with r = sigma*T
// the cubic coefficient vanishes and the fit degenerates to a quadratic.
CubicSegment fit_cubic(const Vec3& x_prev, const Vec3& x_mid, const Vec3& x_next,
                       double sigma0, double sigma1, double T);

// Arc-length-like interpolant of a rod, rescaled to the reference domain
// [0, L].  Internally the curve eta(tau) lives on [0, ell(X)]: straight caps
// on [0, tau_1] and [tau_N, ell] with speed 1, and one cubic segment per
// interior knot interval [tau_i, tau_{i+1}] (unit end speeds).  The public
// parameter is t in [0, L] with y(t) = eta(lambda t), so |y'| = lambda on
// the caps and y(ts[i]) interpolates the edge midpoints.
//
// At a knot the piece to the right is evaluated (derivatives are the right
// limits); queries within a few ulps below a knot snap to it, so knot-value
// queries are deterministic.
class SplineCurve {
 public:
  SplineCurve(const DiscreteRod& rod, double L);

  double length() const { return L_; }                // reference length L
  double ell() const { return part_.total_length; }   // polyline length
  double lambda() const { return part_.lambda; }
  const KnotPartition& knots() const { return part_; }
  int segment_count() const { return static_cast<int>(segments_.size()); }

  // Interior segment with 1-based index i in [1, N-1], spanning the global
  // interval [taus[i], taus[i+1]].
  const CubicSegment& segment(int i) const { return segments_.at(i - 1); }

  Vec3 eval(double t) const;
  Vec3 deriv1(double t) const;
  Vec3 deriv2(double t) const;

 private:
  // Locates the knot interval for a global tau: 0 = start cap,
  // 1..N-1 = interior segment index, N = end cap.
  int locate(double tau) const;
  double to_tau(double t) const;  // domain check, scale, clamp, snap

  double L_ = 0.0;
  KnotPartition part_;
  std::vector<CubicSegment> segments_;
  Vec3 x_first_ = Vec3::Zero(), x_last_ = Vec3::Zero();
  Vec3 dir_first_ = Vec3::Zero(), dir_last_ = Vec3::Zero();  // unit cap dirs
};

SplineCurve build_spline(const DiscreteRod& rod, double L);

// Piecewise-linear twist interpolant z(t) = zeta(lambda t) on [0, L]:
// zeta(tau_i) = phi_i for i = 1..N, linear in between, constant on the caps.
// Same right-limit-at-knots convention as SplineCurve.
class TwistFunction {
 public:
  TwistFunction(const FramedDiscreteRod& rod, double L);

  double length() const { return L_; }
  double lambda() const { return part_.lambda; }
  const KnotPartition& knots() const { return part_; }
  const std::vector<double>& values() const { return values_; }

  double eval(double t) const;
  double deriv(double t) const;

 private:
  double to_tau(double t) const;

  double L_ = 0.0;
  KnotPartition part_;
  std::vector<double> values_;  // phi_1..phi_N at taus[1..N]
};

TwistFunction build_twist(const FramedDiscreteRod& rod, double L);

// Samples the spline at `samples` uniformly spaced t values spanning [0, L]
// (endpoints included) as CSV with header
// t,x,y,z,dx,dy,dz,ddx,ddy,ddz.
void write_spline_csv(const SplineCurve& spline, int samples, std::ostream& out);

}  // namespace kirchhoff
