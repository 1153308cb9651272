#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "kirchhoff/curves.hpp"
#include "kirchhoff/discretize.hpp"
#include "kirchhoff/energy.hpp"
#include "kirchhoff/types.hpp"

namespace kirchhoff {

// One row of an equal-chord recovery sweep.  bend/tor/pen/total come from
// the rod's energy report; bend_err and tor_err are absolute differences
// against the continuum energies (scaled by the same rigidity prefactors);
// frame_dist compares the interpolant's rotation-minimizing frames against
// the curve's own, modulo one global rotation (-1 when frames are skipped).
struct ConvergenceRow {
  int N = 0;
  double r_N = 0.0;
  double lambda = 0.0;
  double bend = 0.0;
  double tor = 0.0;
  double pen = 0.0;
  double total = 0.0;
  double bend_err = 0.0;
  double tor_err = 0.0;
  double frame_dist = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
};

// The default sweep N = 8, 16, ..., 256.
std::vector<int> default_sweep();

// Recovery-discretizes the curve/twist pair at every N in the list and
// reports energies, errors, and (optionally) frame distances.  The penalty's
// reference length is forced to the curve's length; alpha, beta, and the
// rigidities are taken as given.
ConvergenceTable converge(const AnalyticCurve& curve, const TwistProfile& twist,
                          const std::vector<int>& Ns,
                          const PenaltyParams& params,
                          const MaterialParams& material = MaterialParams{},
                          bool with_frames = true);

// CSV with header N,r_N,lambda,bend,tor,pen,total,bend_err,tor_err,frame_dist.
void write_table_csv(const ConvergenceTable& table, std::ostream& out);

// Classical equidistant finite-difference energies on the curve itself,
// h = L/N:
//   riemann_bend: (L/N) sum_{i=1}^{N-1} |(u((i-1)h) + u((i+1)h) - 2u(ih))/h^2|^2
//   riemann_tor:  (L/N) sum_{i=1}^{N-1} |(theta((i+1/2)h) - theta((i-1/2)h))/h|^2
double riemann_bend(const AnalyticCurve& curve, int N);
double riemann_tor(const TwistProfile& twist, int N);

// Distance (mod one global rotation) between the Bishop frames of the
// recovery interpolant and of the curve, sampled on the shared integration
// grid restricted to the interior knot span [ts[1], ts[N]].  Also validates
// orthonormality of every frame produced.
double recovery_frame_distance(const AnalyticCurve& curve, int N,
                               int steps_per_segment = 8);

// recovery_frame_distance over a list of N values.
std::vector<std::pair<int, double>> frame_study(const AnalyticCurve& curve,
                                                const std::vector<int>& Ns);

// The uneven-spacing chain on [0, 3]: x_0 = origin, x_i = (4 / 2^(N-i), 0, 0)
// for i = 1..N-1, x_N = (2, 1, 0), zero twist.  Its chords sum to exactly 3
// (lambda = 1) while the largest edge stays at length 1, so the interpolant
// is N-independent but the edge penalty term N^beta * max edge diverges.
struct CounterexampleReport {
  FramedDiscreteRod rod;
  EnergyReport energy;
  double speed_defect = 0.0;  // sup_t | |y'(t)| - lambda |
};

// Builds the chain for 3 <= N <= 400 (beyond that the shortest chord
// underflows) and evaluates it with penalty exponents alpha = 1, beta = 1/2
// against L = 3.
CounterexampleReport counterexample_spacing(int N);

// JSON object {"rod": ..., "energy": ..., "speed_defect": ...}.
std::string counterexample_json(const CounterexampleReport& report);

}  // namespace kirchhoff
