#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kirchhoff/types.hpp"

namespace kirchhoff {

// An open polyline X = (x_0, ..., x_N) with N >= 2 edges, consecutive points
// distinct, and no edge reversal: the angle between consecutive edges stays
// strictly below pi (enforced with margin 1e-9).  Immutable once built.
class DiscreteRod {
 public:
  explicit DiscreteRod(std::vector<Vec3> points);

  int segment_count() const { return static_cast<int>(points_.size()) - 1; }
  int point_count() const { return static_cast<int>(points_.size()); }
  const std::vector<Vec3>& points() const { return points_; }
  const Vec3& point(int i) const { return points_.at(i); }

 private:
  std::vector<Vec3> points_;
};

// A rod together with one material angle per edge: Phi = (phi_1, ..., phi_N).
struct FramedDiscreteRod {
  FramedDiscreteRod(DiscreteRod rod_in, std::vector<double> angles_in);

  DiscreteRod rod;
  std::vector<double> angles;  // size == rod.segment_count()
};

// Chord-length partition data for a rod scaled against a reference length L.
//
//   taus = (tau_0, ..., tau_{N+1}) with tau_0 = 0, tau_{N+1} = ell(X),
//   tau_i = sum_{k<=i} r_k - r_i/2  for 1 <= i <= N  (mid-edge knots),
//   lambda = ell(X)/L,  ts[i] = taus[i]/lambda.
struct KnotPartition {
  double total_length = 0.0;       // ell(X), compensated sum of chords
  double lambda = 0.0;             // ell(X)/L
  std::vector<double> taus;        // N+2 strictly increasing values
  std::vector<double> ts;          // same knots in the [0, L] parameter
};

// Edge lengths r_i = |x_i - x_{i-1}|, i = 1..N.
std::vector<double> chord_lengths(const DiscreteRod& rod);

// Total polyline length ell(X) as a compensated sum of the chord lengths;
// bitwise-identical to partition(rod, L).total_length.
double polyline_length(const DiscreteRod& rod);

// Knot partition of the rod against reference length L > 0.
KnotPartition partition(const DiscreteRod& rod, double L);

// Turning angle at each interior vertex, i = 1..N-1: the angle in [0, pi)
// between edge i and edge i+1, computed as atan2(|e_i x e_{i+1}|, e_i.e_{i+1}).
std::vector<double> edge_angles(const DiscreteRod& rod);

// ---------------------------------------------------------------------- I/O
//
// Text format: one "x y z" line per point (shortest round-trip decimals),
// then a literal "#angles" line, then one angle per line.  Lines starting
// with '#' other than the separator are comments.  A missing angles block
// reads as all-zero angles.
//
// JSON format: {"points": [[x,y,z], ...], "angles": [phi_1, ...]}.

void write_rod_text(const FramedDiscreteRod& rod, std::ostream& out);
FramedDiscreteRod read_rod_text(std::istream& in);
void write_rod_json(const FramedDiscreteRod& rod, std::ostream& out);
FramedDiscreteRod read_rod_json(std::istream& in);

// Dispatch on file extension: ".json" selects JSON, anything else text.
void save_rod(const FramedDiscreteRod& rod, const std::string& path);
FramedDiscreteRod load_rod(const std::string& path);

}  // namespace kirchhoff
