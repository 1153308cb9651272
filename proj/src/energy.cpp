#include "kirchhoff/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "kirchhoff/numeric.hpp"

namespace kirchhoff {

std::string energy_report_json(const EnergyReport& report) {
  nlohmann::json doc;
  doc["N"] = report.N;
  doc["lambda"] = report.lambda;
  doc["max_edge"] = report.max_edge;
  doc["bend"] = report.bend;
  doc["tor"] = report.tor;
  doc["pen"] = report.pen;
  doc["total"] = report.total;
  return doc.dump();
}

namespace {

// sin^2(phi/2) = |u1 - u0|^2 / 4 for unit edge directions; exact for tiny
// angles where 1 - cos(phi) would cancel.
double half_angle_sin_sq(const Vec3& e0, double r0, const Vec3& e1, double r1) {
  const Vec3 diff = e1 / r1 - e0 / r0;
  return 0.25 * diff.squaredNorm();
}

struct VertexGeometry {
  double r0, r1, sin_sq;
};

VertexGeometry vertex_geometry(const Vec3& x_prev, const Vec3& x_mid,
                               const Vec3& x_next) {
  const Vec3 e0 = x_mid - x_prev;
  const Vec3 e1 = x_next - x_mid;
  const double r0 = e0.norm();
  const double r1 = e1.norm();
  if (r0 == 0.0 || r1 == 0.0)
    throw InvalidInput("vertex energy: coincident points");
  return {r0, r1, half_angle_sin_sq(e0, r0, e1, r1)};
}

}  // namespace

double bend_local(const Vec3& x_prev, const Vec3& x_mid, const Vec3& x_next) {
  const VertexGeometry g = vertex_geometry(x_prev, x_mid, x_next);
  const double T = 0.5 * (g.r0 + g.r1);
  const double T2 = T * T;
  return 2.0 * g.sin_sq * (g.r0 * g.r0 * g.r0 + g.r1 * g.r1 * g.r1) / (T2 * T2);
}

double tor_local(const Vec3& x_prev, const Vec3& x_mid, const Vec3& x_next,
                 double phi0, double phi1) {
  const VertexGeometry g = vertex_geometry(x_prev, x_mid, x_next);
  const double T = 0.5 * (g.r0 + g.r1);
  const double d = phi1 - phi0;
  return d * d / T;
}

double bend_local_sum(const DiscreteRod& rod) {
  const int N = rod.segment_count();
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum)
  for (int i = 1; i < N; ++i)
    sum += bend_local(rod.point(i - 1), rod.point(i), rod.point(i + 1));
  return sum;
}

double tor_local_sum(const FramedDiscreteRod& rod) {
  const int N = rod.rod.segment_count();
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum)
  for (int i = 1; i < N; ++i)
    sum += tor_local(rod.rod.point(i - 1), rod.rod.point(i), rod.rod.point(i + 1),
                     rod.angles[i - 1], rod.angles[i]);
  return sum;
}

namespace {

double segment_bend_integral(const CubicSegment& seg) {
  const double T = seg.T;
  const Vec3& a = seg.cubic;
  const Vec3& b = seg.quad;
  return T * (12.0 * a.squaredNorm() * T * T + 12.0 * a.dot(b) * T +
              4.0 * b.squaredNorm());
}

}  // namespace

double segment_bend_sum(const SplineCurve& spline) {
  const int n = spline.segment_count();
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum)
  for (int i = 1; i <= n; ++i) sum += segment_bend_integral(spline.segment(i));
  return sum;
}

double max_speed_defect(const SplineCurve& spline, int samples) {
  if (samples < 2) throw InvalidInput("max_speed_defect: need >= 2 samples");
  const double L = spline.length();
  const double lambda = spline.lambda();
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst)
  for (int k = 0; k < samples; ++k) {
    const double t = L * k / (samples - 1);
    worst = std::max(worst, std::abs(spline.deriv1(t).norm() - lambda));
  }
  return worst;
}

namespace serial {

double bend_local_sum(const DiscreteRod& rod) {
  CompensatedAccumulator acc;
  for (int i = 1; i < rod.segment_count(); ++i)
    acc.add(kirchhoff::bend_local(rod.point(i - 1), rod.point(i),
                                  rod.point(i + 1)));
  return acc.value();
}

double tor_local_sum(const FramedDiscreteRod& rod) {
  CompensatedAccumulator acc;
  for (int i = 1; i < rod.rod.segment_count(); ++i)
    acc.add(kirchhoff::tor_local(rod.rod.point(i - 1), rod.rod.point(i),
                                 rod.rod.point(i + 1), rod.angles[i - 1],
                                 rod.angles[i]));
  return acc.value();
}

double segment_bend_sum(const SplineCurve& spline) {
  CompensatedAccumulator acc;
  for (int i = 1; i <= spline.segment_count(); ++i)
    acc.add(segment_bend_integral(spline.segment(i)));
  return acc.value();
}

double max_speed_defect(const SplineCurve& spline, int samples) {
  if (samples < 2) throw InvalidInput("max_speed_defect: need >= 2 samples");
  const double L = spline.length();
  const double lambda = spline.lambda();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = L * k / (samples - 1);
    worst = std::max(worst, std::abs(spline.deriv1(t).norm() - lambda));
  }
  return worst;
}

}  // namespace serial

double bend_energy_spline(const DiscreteRod& rod, double L) {
  const SplineCurve spline(rod, L);
  const double lambda = spline.lambda();
  return lambda * lambda * lambda * segment_bend_sum(spline);
}

double tor_energy(const FramedDiscreteRod& rod, double L) {
  // ∫ |z'|^2 dt interval by interval in the t parameter.  z is constant on
  // the caps, so only the interior knot intervals contribute.
  const TwistFunction twist(rod, L);
  const std::vector<double>& ts = twist.knots().ts;
  const std::vector<double>& phi = twist.values();
  CompensatedAccumulator acc;
  for (size_t i = 1; i < phi.size(); ++i) {
    const double dt = ts[i + 1] - ts[i];
    const double slope = (phi[i] - phi[i - 1]) / dt;
    acc.add(slope * slope * dt);
  }
  return acc.value();
}

double penalty(const DiscreteRod& rod, int N, const PenaltyParams& params) {
  if (N != rod.segment_count())
    throw InvalidInput("penalty: N does not match the rod's edge count");
  if (!(params.alpha > 0.0 && params.alpha < 2.0))
    throw InvalidInput("penalty: alpha must lie in (0, 2)");
  if (!(params.beta > 0.0 && params.beta < 1.0))
    throw InvalidInput("penalty: beta must lie in (0, 1)");
  if (!(params.L > 0.0))
    throw InvalidInput("penalty: L must be positive");
  const KnotPartition part = partition(rod, params.L);
  const std::vector<double> r = chord_lengths(rod);
  const double max_edge = *std::max_element(r.begin(), r.end());
  const double edge_term = std::pow(N, params.beta) * max_edge;
  if (params.hard) {
    return std::abs(part.lambda - 1.0) <= 1e-12
               ? edge_term
               : std::numeric_limits<double>::infinity();
  }
  return std::pow(N, params.alpha) * std::abs(part.lambda - 1.0) + edge_term;
}

EnergyReport total_energy(const FramedDiscreteRod& rod,
                          const PenaltyParams& params,
                          const MaterialParams& material) {
  const int N = rod.rod.segment_count();
  const double L = params.L;
  const KnotPartition part = partition(rod.rod, L);
  const std::vector<double> r = chord_lengths(rod.rod);

  EnergyReport report;
  report.N = N;
  report.lambda = part.lambda;
  report.max_edge = *std::max_element(r.begin(), r.end());
  report.bend = 0.5 * material.bending_rigidity * bend_energy_spline(rod.rod, L);
  report.tor = 0.5 * material.torsional_rigidity * tor_energy(rod, L);
  report.pen = penalty(rod.rod, N, params);
  report.total = report.bend + report.tor + report.pen;
  return report;
}

}  // namespace kirchhoff
