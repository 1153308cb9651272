#pragma once

#include <string>

#include "kirchhoff/rod.hpp"
#include "kirchhoff/spline.hpp"
#include "kirchhoff/types.hpp"

namespace kirchhoff {

// Spacing penalty  N^alpha |lambda - 1| + N^beta max_i r_i  with
// alpha in (0, 2) and beta in (0, 1); L is the reference length defining
// lambda.  With hard = true the soft |lambda - 1| term is replaced by a hard
// constraint: the penalty is N^beta max_i r_i when |lambda - 1| <= 1e-12 and
// +infinity otherwise.
struct PenaltyParams {
  double alpha = 1.0;
  double beta = 0.5;
  double L = 1.0;
  bool hard = false;
};

// Stiffness prefactors: flexural rigidity (CLI flag --ej) and torsional
// rigidity (CLI flag --gj1).  The defaults of 2 make the energy prefactors
// EJ/2 and GJ1/2 equal to one.
struct MaterialParams {
  double bending_rigidity = 2.0;
  double torsional_rigidity = 2.0;
};

struct EnergyReport {
  int N = 0;
  double lambda = 0.0;
  double max_edge = 0.0;
  double bend = 0.0;   // (EJ/2) * scaled bending energy
  double tor = 0.0;    // (GJ1/2) * scaled torsion energy
  double pen = 0.0;
  double total = 0.0;  // bend + tor + pen
};

// One-line JSON object with keys N, lambda, max_edge, bend, tor, pen, total.
std::string energy_report_json(const EnergyReport& report);

// Bending contribution of one interior vertex:
//   2 sin^2(phi/2) (r0^3 + r1^3) / T^4,  T = (r0 + r1)/2,
// where phi is the turning angle between the edges and sin^2(phi/2) is
// computed from the unit edge difference, robust for small angles.
double bend_local(const Vec3& x_prev, const Vec3& x_mid, const Vec3& x_next);

// Torsion contribution of one interior vertex: |phi1 - phi0|^2 / T.
double tor_local(const Vec3& x_prev, const Vec3& x_mid, const Vec3& x_next,
                 double phi0, double phi1);

// Sums of the local contributions over all interior vertices, and the sum of
// per-segment closed-form integrals  ∫ |S''|^2 dtau = 12|A|^2 T^3
// + 12 (A.B) T^2 + 4 |B|^2 T  over the spline's interior segments.  The
// unqualified versions parallelize with OpenMP; kirchhoff::serial holds
// compensated sequential reference implementations used for testing.
double bend_local_sum(const DiscreteRod& rod);
double tor_local_sum(const FramedDiscreteRod& rod);
double segment_bend_sum(const SplineCurve& spline);

// Largest deviation of the spline speed from lambda over `samples` uniform
// parameter values spanning [0, L], endpoints included.
double max_speed_defect(const SplineCurve& spline, int samples);

namespace serial {
double bend_local_sum(const DiscreteRod& rod);
double tor_local_sum(const FramedDiscreteRod& rod);
double segment_bend_sum(const SplineCurve& spline);
double max_speed_defect(const SplineCurve& spline, int samples);
}  // namespace serial

// Unscaled interpolant energies against reference length L:
//   bend_energy_spline = lambda^3 * segment_bend_sum  (= ∫ |y''|^2 dt), and
//   tor_energy = ∫ |z'|^2 dt computed interval by interval in the t
// parameter, which agrees with lambda * tor_local_sum up to roundoff.
double bend_energy_spline(const DiscreteRod& rod, double L);
double tor_energy(const FramedDiscreteRod& rod, double L);

// Spacing penalty of the rod; N must equal the rod's edge count.
double penalty(const DiscreteRod& rod, int N, const PenaltyParams& params);

// Full report: bend and tor are scaled by the rigidity prefactors /2, pen is
// added unscaled, and lambda is measured against params.L.
EnergyReport total_energy(const FramedDiscreteRod& rod,
                          const PenaltyParams& params,
                          const MaterialParams& material = MaterialParams{});

}  // namespace kirchhoff
