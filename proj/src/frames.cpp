#include "kirchhoff/frames.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "kirchhoff/numeric.hpp"

namespace kirchhoff {

namespace {

constexpr double kSpeedFloor = 1e-6;      // |y'| below this is degenerate
constexpr double kAlignmentTol = 1e-7;    // required b1-vs-tangent angle

double angle_between(const Vec3& u, const Vec3& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

// Rodrigues rotation taking unit vector u to unit vector v about their
// common perpendicular.
Mat3 rotation_between(const Vec3& u, const Vec3& v) {
  const Vec3 w = u.cross(v);
  const double s = w.norm();
  const double c = u.dot(v);
  if (s == 0.0) {
    if (c > 0.0) return Mat3::Identity();
    throw NumericalError("rotation_between: opposite directions");
  }
  const Vec3 axis = w / s;
  Mat3 k = Mat3::Zero();
  k(0, 1) = -axis.z(); k(0, 2) = axis.y();
  k(1, 0) = axis.z();  k(1, 2) = -axis.x();
  k(2, 0) = -axis.y(); k(2, 1) = axis.x();
  return Mat3::Identity() + s * k + (1.0 - c) * k * k;
}

void require_alignment(const Vec3& b1, const Vec3& tangent, const char* where) {
  if (angle_between(b1, tangent) > kAlignmentTol)
    throw InvalidInput(std::string(where) +
                       ": initial frame does not align with the tangent");
}

}  // namespace

void Frame::validate() const {
  if (orthonormality_defect() > 1e-9)
    throw NumericalError("Frame: orthonormality defect exceeds 1e-9");
  if (!(basis.determinant() > 0.0))
    throw NumericalError("Frame: not positively oriented");
}

Frame Frame::from_tangent(const Vec3& tangent) {
  const double norm = tangent.norm();
  if (norm < kSpeedFloor)
    throw NumericalError("Frame::from_tangent: degenerate tangent");
  const Vec3 b1 = tangent / norm;
  int smallest = 0;
  for (int c = 1; c < 3; ++c)
    if (std::abs(b1[c]) < std::abs(b1[smallest])) smallest = c;
  Vec3 b2 = Vec3::Unit(smallest) - b1[smallest] * b1;
  b2.normalize();
  Frame f;
  f.basis.col(0) = b1;
  f.basis.col(1) = b2;
  f.basis.col(2) = b1.cross(b2);
  return f;
}

Mat3 twist_rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Mat3 r;
  r << 1.0, 0.0, 0.0,
       0.0, c,   -s,
       0.0, s,    c;
  return r;
}

std::vector<Frame> discrete_parallel_transport(const DiscreteRod& rod,
                                               const Frame& initial) {
  const int N = rod.segment_count();
  std::vector<Vec3> dirs(N);
  for (int i = 0; i < N; ++i)
    dirs[i] = (rod.point(i + 1) - rod.point(i)).normalized();
  require_alignment(initial.b1(), dirs[0], "discrete_parallel_transport");

  std::vector<Frame> frames(N);
  frames[0] = initial;
  for (int i = 1; i < N; ++i) {
    frames[i].basis = rotation_between(dirs[i - 1], dirs[i]) * frames[i - 1].basis;
    frames[i].validate();
  }
  return frames;
}

namespace {

// Integrates B' = [omega]_x B across [t0, t1] with `steps` RK4 steps, pinning
// b1 to the exact tangent and re-orthonormalizing after every step.  Appends
// the frame at each step end (not at t0) to the field.
void rk4_interval(const std::function<Vec3(double)>& omega,
                  const std::function<Vec3(double)>& unit_tangent, double t0,
                  double t1, int steps, Frame* frame, FrameField* out) {
  const double h = (t1 - t0) / steps;
  for (int k = 0; k < steps; ++k) {
    const double a = t0 + k * h;
    Mat3 B = frame->basis;
    auto rhs = [&omega](double t, const Mat3& M) -> Mat3 {
      const Vec3 w = omega(t);
      Mat3 cross = Mat3::Zero();
      cross(0, 1) = -w.z(); cross(0, 2) = w.y();
      cross(1, 0) = w.z();  cross(1, 2) = -w.x();
      cross(2, 0) = -w.y(); cross(2, 1) = w.x();
      return cross * M;
    };
    const Mat3 k1 = rhs(a, B);
    const Mat3 k2 = rhs(a + 0.5 * h, B + 0.5 * h * k1);
    const Mat3 k3 = rhs(a + 0.5 * h, B + 0.5 * h * k2);
    const Mat3 k4 = rhs(a + h, B + h * k3);
    B += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double t_end = (k + 1 == steps) ? t1 : a + h;
    const Vec3 b1 = unit_tangent(t_end);
    Vec3 b2 = B.col(1) - B.col(1).dot(b1) * b1;
    const double b2_norm = b2.norm();
    if (b2_norm < 1e-12)
      throw NumericalError("integrate_bishop: frame collapsed during step");
    b2 /= b2_norm;
    frame->basis.col(0) = b1;
    frame->basis.col(1) = b2;
    frame->basis.col(2) = b1.cross(b2);
    out->params.push_back(t_end);
    out->frames.push_back(*frame);
  }
}

void check_breakpoints(const std::vector<double>& breakpoints, int steps) {
  if (breakpoints.size() < 2)
    throw InvalidInput("integrate_bishop: need at least 2 breakpoints");
  if (steps < 1)
    throw InvalidInput("integrate_bishop: steps_per_segment must be >= 1");
  for (size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw InvalidInput("integrate_bishop: breakpoints must increase");
}

Vec3 omega_from(const std::function<Vec3(double)>& d1,
                const std::function<Vec3(double)>& d2, double t) {
  const Vec3 v = d1(t);
  const double speed = v.norm();
  if (speed < kSpeedFloor)
    throw NumericalError("integrate_bishop: curve speed below 1e-6");
  return v.cross(d2(t)) / (speed * speed);
}

}  // namespace

FrameField integrate_bishop(const std::function<Vec3(double)>& deriv1,
                            const std::function<Vec3(double)>& deriv2,
                            const std::vector<double>& breakpoints,
                            const Frame& initial, int steps_per_segment) {
  check_breakpoints(breakpoints, steps_per_segment);
  auto omega = [&](double t) { return omega_from(deriv1, deriv2, t); };
  auto tangent = [&](double t) {
    const Vec3 v = deriv1(t);
    const double speed = v.norm();
    if (speed < kSpeedFloor)
      throw NumericalError("integrate_bishop: curve speed below 1e-6");
    return Vec3(v / speed);
  };
  require_alignment(initial.b1(), tangent(breakpoints.front()),
                    "integrate_bishop");

  FrameField field;
  Frame frame = initial;
  field.params.push_back(breakpoints.front());
  field.frames.push_back(frame);
  for (size_t j = 0; j + 1 < breakpoints.size(); ++j)
    rk4_interval(omega, tangent, breakpoints[j], breakpoints[j + 1],
                 steps_per_segment, &frame, &field);
  return field;
}

FrameField integrate_bishop(const SplineCurve& spline, const Frame& initial,
                            int steps_per_segment) {
  if (steps_per_segment < 1)
    throw InvalidInput("integrate_bishop: steps_per_segment must be >= 1");
  const KnotPartition& part = spline.knots();
  const int N = static_cast<int>(part.taus.size()) - 2;
  const double lambda = part.lambda;

  // Per-interval polynomial evaluators keep every Runge-Kutta stage on the
  // current piece; evaluating through SplineCurve at a shared knot would pick
  // the right limit of the neighbouring piece instead.
  const Vec3 cap_first = lambda * (spline.eval(part.ts[1]) - spline.eval(0.0))
                             .normalized();
  const Vec3 cap_last =
      lambda *
      (spline.eval(spline.length()) - spline.eval(part.ts[N])).normalized();

  require_alignment(initial.b1(), cap_first.normalized(), "integrate_bishop");

  FrameField field;
  Frame frame = initial;
  field.params.push_back(part.ts.front());
  field.frames.push_back(frame);
  for (int j = 0; j <= N; ++j) {
    std::function<Vec3(double)> d1, d2;
    if (j == 0) {
      d1 = [cap_first](double) { return cap_first; };
      d2 = [](double) { return Vec3::Zero(); };
    } else if (j == N) {
      d1 = [cap_last](double) { return cap_last; };
      d2 = [](double) { return Vec3::Zero(); };
    } else {
      const CubicSegment& seg = spline.segment(j);
      const double tau_j = part.taus[j];
      d1 = [&seg, tau_j, lambda](double t) {
        return Vec3(lambda * seg.deriv1(lambda * t - tau_j));
      };
      d2 = [&seg, tau_j, lambda](double t) {
        return Vec3(lambda * lambda * seg.deriv2(lambda * t - tau_j));
      };
    }
    auto omega = [&](double t) { return omega_from(d1, d2, t); };
    auto tangent = [&](double t) { return Vec3(d1(t).normalized()); };
    rk4_interval(omega, tangent, part.ts[j], part.ts[j + 1], steps_per_segment,
                 &frame, &field);
  }
  return field;
}

FrameField integrate_bishop(const AnalyticCurve& curve,
                            const std::vector<double>& breakpoints,
                            const Frame& initial, int steps_per_segment) {
  if (!curve.deriv1 || !curve.deriv2)
    throw InvalidInput("integrate_bishop: curve lacks derivatives");
  return integrate_bishop(curve.deriv1, curve.deriv2, breakpoints, initial,
                          steps_per_segment);
}

FrameField apply_twist(const FrameField& bishop, const TwistFunction& twist) {
  FrameField out;
  out.params = bishop.params;
  out.frames.resize(bishop.frames.size());
  for (size_t k = 0; k < bishop.frames.size(); ++k) {
    out.frames[k].basis =
        bishop.frames[k].basis * twist_rotation(twist.eval(bishop.params[k]));
  }
  return out;
}

FrameField subsample(const FrameField& field, const std::vector<double>& params,
                     double tol) {
  FrameField out;
  for (double p : params) {
    auto it = std::lower_bound(field.params.begin(), field.params.end(), p);
    int best = static_cast<int>(it - field.params.begin());
    if (best == field.size() ||
        (best > 0 && p - field.params[best - 1] < field.params[best] - p))
      --best;
    if (best < 0 || std::abs(field.params[best] - p) > tol)
      throw InvalidInput("subsample: parameter not on the stored grid");
    out.params.push_back(field.params[best]);
    out.frames.push_back(field.frames[best]);
  }
  return out;
}

double frame_distance_mod_rotation(const FrameField& a, const FrameField& b) {
  if (a.size() != b.size() || a.size() == 0)
    throw InvalidInput("frame_distance_mod_rotation: mismatched field sizes");
  for (int k = 0; k < a.size(); ++k)
    if (std::abs(a.params[k] - b.params[k]) > 1e-9)
      throw InvalidInput("frame_distance_mod_rotation: mismatched sample grids");

  // ||A R(theta) - B||_F^2 = 6 - 2 (H00 + (H11+H22) cos + (H21-H12) sin),
  // H = A^T B, so each sample contributes a sinusoid in theta.
  const int n = a.size();
  std::vector<double> base(n), cosamp(n), sinamp(n);
  for (int k = 0; k < n; ++k) {
    const Mat3 h = a.frames[k].basis.transpose() * b.frames[k].basis;
    base[k] = 6.0 - 2.0 * h(0, 0);
    cosamp[k] = 2.0 * (h(1, 1) + h(2, 2));
    sinamp[k] = 2.0 * (h(2, 1) - h(1, 2));
  }
  auto worst_sq = [&](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
      worst = std::max(worst, base[k] - cosamp[k] * c - sinamp[k] * s);
    return worst;
  };

  // Coarse scan over a uniform grid plus each sample's own optimal angle,
  // then golden-section refinement around the best candidate.
  const int grid = 256;
  double best_theta = 0.0;
  double best = worst_sq(0.0);
  for (int g = 1; g < grid; ++g) {
    const double theta = 2.0 * M_PI * g / grid;
    const double value = worst_sq(theta);
    if (value < best) {
      best = value;
      best_theta = theta;
    }
  }
  for (int k = 0; k < n; ++k) {
    const double theta = std::atan2(sinamp[k], cosamp[k]);
    const double value = worst_sq(theta);
    if (value < best) {
      best = value;
      best_theta = theta;
    }
  }
  const double span = 2.0 * M_PI / grid;
  const double refined = golden_min(worst_sq, best_theta - span,
                                    best_theta + span, 1e-10);

  // The trace form cancels catastrophically for nearly identical frames
  // (6 - 2 tr bottoms out around sqrt(eps)), so evaluate the winner by
  // forming the differences directly.
  auto worst_direct = [&](double theta) {
    const Mat3 r = twist_rotation(theta);
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
      worst = std::max(worst,
                       (a.frames[k].basis * r - b.frames[k].basis).norm());
    return worst;
  };
  return std::min(worst_direct(best_theta), worst_direct(refined));
}

namespace {

void append_double(std::string& row, double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc())
    throw NumericalError("write_frames_csv: number formatting failed");
  row.append(buf, ptr);
}

}  // namespace

void write_frames_csv(const FrameField& field, std::ostream& out) {
  out << "t,b1x,b1y,b1z,b2x,b2y,b2z,b3x,b3y,b3z\n";
  for (int k = 0; k < field.size(); ++k) {
    std::string row;
    append_double(row, field.params[k]);
    for (int col = 0; col < 3; ++col)
      for (int r = 0; r < 3; ++r) {
        row.push_back(',');
        append_double(row, field.frames[k].basis(r, col));
      }
    row.push_back('\n');
    out << row;
  }
}

}  // namespace kirchhoff
