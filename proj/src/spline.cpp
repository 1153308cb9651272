#include "kirchhoff/spline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

namespace kirchhoff {

CubicSegment fit_cubic(const Vec3& x_prev, const Vec3& x_mid, const Vec3& x_next,
                       double sigma0, double sigma1, double T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw InvalidInput("fit_cubic: T must be positive and finite");
  if (!(sigma0 > 0.0) || !(sigma1 > 0.0))
    throw InvalidInput("fit_cubic: speeds must be positive");
  const double r0 = (x_mid - x_prev).norm();
  const double r1 = (x_next - x_mid).norm();
  if (r0 == 0.0 || r1 == 0.0)
    throw InvalidInput("fit_cubic: coincident input points");
  const Vec3 u0 = (x_mid - x_prev) / r0;
  const Vec3 u1 = (x_next - x_mid) / r1;

  CubicSegment seg;
  seg.T = T;
  seg.constant = 0.5 * (x_prev + x_mid);
  seg.linear = sigma0 * u0;
  // Hermite residuals: position gap beyond the linear part, and velocity gap.
  const Vec3 gap = 0.5 * (x_next - x_prev) - sigma0 * T * u0;
  const Vec3 dv = sigma1 * u1 - sigma0 * u0;
  seg.cubic = (dv * T - 2.0 * gap) / (T * T * T);
  seg.quad = (3.0 * gap - dv * T) / (T * T);
  return seg;
}

namespace {

// Queries a few ulps below a knot count as the knot itself, keeping
// right-limit evaluation deterministic when t is produced as tau/lambda.
double snap_width(double ell) {
  return 8.0 * std::numeric_limits<double>::epsilon() * ell;
}

double domain_slack(double L) { return 1e-12 * std::max(1.0, L); }

}  // namespace

SplineCurve::SplineCurve(const DiscreteRod& rod, double L)
    : L_(L), part_(partition(rod, L)) {
  const int N = rod.segment_count();
  const std::vector<double> r = chord_lengths(rod);
  segments_.reserve(N - 1);
  for (int i = 1; i < N; ++i) {
    const double T = part_.taus[i + 1] - part_.taus[i];
    segments_.push_back(
        fit_cubic(rod.point(i - 1), rod.point(i), rod.point(i + 1), 1.0, 1.0, T));
  }
  x_first_ = rod.point(0);
  x_last_ = rod.point(N);
  dir_first_ = (rod.point(1) - rod.point(0)) / r.front();
  dir_last_ = (rod.point(N) - rod.point(N - 1)) / r.back();
}

double SplineCurve::to_tau(double t) const {
  if (!std::isfinite(t) || t < -domain_slack(L_) || t > L_ + domain_slack(L_))
    throw InvalidInput("SplineCurve: parameter outside [0, L]");
  return std::clamp(part_.lambda * t, 0.0, part_.total_length);
}

int SplineCurve::locate(double tau) const {
  const int N = static_cast<int>(part_.taus.size()) - 2;
  // First knot strictly above tau, minus one, clamped to a valid interval.
  auto it = std::upper_bound(part_.taus.begin(), part_.taus.end(), tau);
  int j = static_cast<int>(it - part_.taus.begin()) - 1;
  j = std::clamp(j, 0, N);
  if (j < N && part_.taus[j + 1] - tau <= snap_width(part_.total_length))
    ++j;  // snap up to the next knot's right limit
  return j;
}

Vec3 SplineCurve::eval(double t) const {
  const double tau = to_tau(t);
  const int j = locate(tau);
  const int N = static_cast<int>(part_.taus.size()) - 2;
  if (j == 0) return x_first_ + tau * dir_first_;
  if (j == N) return x_last_ - (part_.total_length - tau) * dir_last_;
  return segments_[j - 1].eval(tau - part_.taus[j]);
}

Vec3 SplineCurve::deriv1(double t) const {
  const double tau = to_tau(t);
  const int j = locate(tau);
  const int N = static_cast<int>(part_.taus.size()) - 2;
  const double lambda = part_.lambda;
  if (j == 0) return lambda * dir_first_;
  if (j == N) return lambda * dir_last_;
  return lambda * segments_[j - 1].deriv1(tau - part_.taus[j]);
}

Vec3 SplineCurve::deriv2(double t) const {
  const double tau = to_tau(t);
  const int j = locate(tau);
  const int N = static_cast<int>(part_.taus.size()) - 2;
  const double lambda = part_.lambda;
  if (j == 0 || j == N) return Vec3::Zero();
  return lambda * lambda * segments_[j - 1].deriv2(tau - part_.taus[j]);
}

SplineCurve build_spline(const DiscreteRod& rod, double L) {
  return SplineCurve(rod, L);
}

TwistFunction::TwistFunction(const FramedDiscreteRod& rod, double L)
    : L_(L), part_(partition(rod.rod, L)), values_(rod.angles) {}

double TwistFunction::to_tau(double t) const {
  if (!std::isfinite(t) || t < -domain_slack(L_) || t > L_ + domain_slack(L_))
    throw InvalidInput("TwistFunction: parameter outside [0, L]");
  return std::clamp(part_.lambda * t, 0.0, part_.total_length);
}

double TwistFunction::eval(double t) const {
  const double tau = to_tau(t);
  const int N = static_cast<int>(values_.size());
  auto it = std::upper_bound(part_.taus.begin(), part_.taus.end(), tau);
  int j = static_cast<int>(it - part_.taus.begin()) - 1;
  j = std::clamp(j, 0, N);
  if (j < N && part_.taus[j + 1] - tau <= snap_width(part_.total_length)) ++j;
  if (j == 0) return values_.front();
  if (j == N) return values_.back();
  const double T = part_.taus[j + 1] - part_.taus[j];
  const double s = (tau - part_.taus[j]) / T;
  return values_[j - 1] + s * (values_[j] - values_[j - 1]);
}

double TwistFunction::deriv(double t) const {
  const double tau = to_tau(t);
  const int N = static_cast<int>(values_.size());
  auto it = std::upper_bound(part_.taus.begin(), part_.taus.end(), tau);
  int j = static_cast<int>(it - part_.taus.begin()) - 1;
  j = std::clamp(j, 0, N);
  if (j < N && part_.taus[j + 1] - tau <= snap_width(part_.total_length)) ++j;
  if (j == 0 || j == N) return 0.0;
  const double T = part_.taus[j + 1] - part_.taus[j];
  return part_.lambda * (values_[j] - values_[j - 1]) / T;
}

TwistFunction build_twist(const FramedDiscreteRod& rod, double L) {
  return TwistFunction(rod, L);
}

namespace {

void append_double(std::string& row, double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc())
    throw NumericalError("write_spline_csv: number formatting failed");
  row.append(buf, ptr);
}

}  // namespace

void write_spline_csv(const SplineCurve& spline, int samples, std::ostream& out) {
  if (samples < 2) throw InvalidInput("write_spline_csv: need >= 2 samples");
  out << "t,x,y,z,dx,dy,dz,ddx,ddy,ddz\n";
  const double L = spline.length();
  for (int k = 0; k < samples; ++k) {
    const double t = L * k / (samples - 1);
    const Vec3 p = spline.eval(t);
    const Vec3 d1 = spline.deriv1(t);
    const Vec3 d2 = spline.deriv2(t);
    std::string row;
    append_double(row, t);
    for (const Vec3* v : {&p, &d1, &d2})
      for (int c = 0; c < 3; ++c) {
        row.push_back(',');
        append_double(row, (*v)[c]);
      }
    row.push_back('\n');
    out << row;
  }
}

}  // namespace kirchhoff
