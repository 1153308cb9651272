#include "kirchhoff/rod.hpp"

#include <cmath>

#include "kirchhoff/numeric.hpp"

namespace kirchhoff {

namespace {

constexpr double kReversalMargin = 1e-9;  // reject vertex angles >= pi - this

double vertex_angle(const Vec3& e0, const Vec3& e1) {
  return std::atan2(e0.cross(e1).norm(), e0.dot(e1));
}

}  // namespace

DiscreteRod::DiscreteRod(std::vector<Vec3> points) : points_(std::move(points)) {
  const int n_points = static_cast<int>(points_.size());
  if (n_points < 3)
    throw InvalidInput("DiscreteRod: need at least 3 points (2 edges)");
  for (const Vec3& p : points_)
    if (!p.allFinite()) throw InvalidInput("DiscreteRod: non-finite point");
  for (int i = 1; i < n_points; ++i)
    if ((points_[i] - points_[i - 1]).norm() == 0.0)
      throw InvalidInput("DiscreteRod: consecutive points coincide at index " +
                         std::to_string(i));
  for (int i = 1; i + 1 < n_points; ++i) {
    const Vec3 e0 = points_[i] - points_[i - 1];
    const Vec3 e1 = points_[i + 1] - points_[i];
    if (vertex_angle(e0, e1) >= M_PI - kReversalMargin)
      throw InvalidInput("DiscreteRod: edge reversal at vertex " +
                         std::to_string(i));
  }
}

FramedDiscreteRod::FramedDiscreteRod(DiscreteRod rod_in,
                                     std::vector<double> angles_in)
    : rod(std::move(rod_in)), angles(std::move(angles_in)) {
  if (static_cast<int>(angles.size()) != rod.segment_count())
    throw InvalidInput("FramedDiscreteRod: need one angle per edge (" +
                       std::to_string(rod.segment_count()) + "), got " +
                       std::to_string(angles.size()));
  for (double a : angles)
    if (!std::isfinite(a))
      throw InvalidInput("FramedDiscreteRod: non-finite angle");
}

std::vector<double> chord_lengths(const DiscreteRod& rod) {
  std::vector<double> r(rod.segment_count());
  for (int i = 0; i < rod.segment_count(); ++i)
    r[i] = (rod.point(i + 1) - rod.point(i)).norm();
  return r;
}

double polyline_length(const DiscreteRod& rod) {
  return compensated_sum(chord_lengths(rod));
}

KnotPartition partition(const DiscreteRod& rod, double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw InvalidInput("partition: L must be positive and finite");
  const std::vector<double> r = chord_lengths(rod);
  const int N = rod.segment_count();

  KnotPartition part;
  part.taus.resize(N + 2);
  part.taus[0] = 0.0;
  CompensatedAccumulator prefix;  // running sum_{k<=i} r_k
  for (int i = 1; i <= N; ++i) {
    prefix.add(r[i - 1]);
    part.taus[i] = prefix.value() - 0.5 * r[i - 1];
  }
  part.taus[N + 1] = prefix.value();
  part.total_length = prefix.value();
  part.lambda = part.total_length / L;

  for (int i = 0; i <= N; ++i)
    if (!(part.taus[i] < part.taus[i + 1]))
      throw NumericalError("partition: knots fail to increase strictly");

  part.ts.resize(N + 2);
  for (int i = 0; i <= N + 1; ++i) part.ts[i] = part.taus[i] / part.lambda;
  return part;
}

std::vector<double> edge_angles(const DiscreteRod& rod) {
  const int N = rod.segment_count();
  std::vector<double> angles(N - 1);
  for (int i = 1; i < N; ++i) {
    const Vec3 e0 = rod.point(i) - rod.point(i - 1);
    const Vec3 e1 = rod.point(i + 1) - rod.point(i);
    angles[i - 1] = vertex_angle(e0, e1);
  }
  return angles;
}

}  // namespace kirchhoff
