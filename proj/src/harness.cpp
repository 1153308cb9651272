#include "kirchhoff/harness.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "kirchhoff/frames.hpp"
#include "kirchhoff/numeric.hpp"
#include "kirchhoff/spline.hpp"

namespace kirchhoff {

std::vector<int> default_sweep() { return {8, 16, 32, 64, 128, 256}; }

namespace {

double continuum_bend(const AnalyticCurve& curve) {
  if (curve.exact_bend_energy) return *curve.exact_bend_energy;
  return adaptive_gl16(
      [&curve](double s) { return curve.deriv2(s).squaredNorm(); }, 0.0,
      curve.length);
}

double continuum_tor(const TwistProfile& twist) {
  if (twist.exact_tor_energy) return *twist.exact_tor_energy;
  return adaptive_gl16(
      [&twist](double s) {
        const double d = twist.deriv(s);
        return d * d;
      },
      0.0, twist.length);
}

// Drops the cap intervals from a field integrated with a fixed per-interval
// step count, keeping samples with t in [ts[1], ts[N]].
FrameField interior_slice(const FrameField& field, int steps_per_segment) {
  FrameField out;
  const int first = steps_per_segment;
  const int last = field.size() - 1 - steps_per_segment;
  if (first > last)
    throw InvalidInput("interior_slice: field too short for its step count");
  out.params.assign(field.params.begin() + first,
                    field.params.begin() + last + 1);
  out.frames.assign(field.frames.begin() + first,
                    field.frames.begin() + last + 1);
  return out;
}

}  // namespace

ConvergenceTable converge(const AnalyticCurve& curve, const TwistProfile& twist,
                          const std::vector<int>& Ns,
                          const PenaltyParams& params,
                          const MaterialParams& material, bool with_frames) {
  if (Ns.empty()) throw InvalidInput("converge: empty N list");
  PenaltyParams local = params;
  local.L = curve.length;

  const double bend_ref = 0.5 * material.bending_rigidity * continuum_bend(curve);
  const double tor_ref = 0.5 * material.torsional_rigidity * continuum_tor(twist);

  ConvergenceTable table;
  for (int N : Ns) {
    double radius = 0.0;
    const FramedDiscreteRod rod = recovery_rod(curve, twist, N, &radius);
    const EnergyReport report = total_energy(rod, local, material);

    ConvergenceRow row;
    row.N = N;
    row.r_N = radius;
    row.lambda = report.lambda;
    row.bend = report.bend;
    row.tor = report.tor;
    row.pen = report.pen;
    row.total = report.total;
    row.bend_err = std::abs(report.bend - bend_ref);
    row.tor_err = std::abs(report.tor - tor_ref);
    row.frame_dist = with_frames ? recovery_frame_distance(curve, N) : -1.0;
    table.rows.push_back(row);
  }
  return table;
}

namespace {

void append_double(std::string& row, double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc())
    throw NumericalError("write_table_csv: number formatting failed");
  row.append(buf, ptr);
}

}  // namespace

void write_table_csv(const ConvergenceTable& table, std::ostream& out) {
  out << "N,r_N,lambda,bend,tor,pen,total,bend_err,tor_err,frame_dist\n";
  for (const ConvergenceRow& row : table.rows) {
    std::string line = std::to_string(row.N);
    for (double v : {row.r_N, row.lambda, row.bend, row.tor, row.pen, row.total,
                     row.bend_err, row.tor_err, row.frame_dist}) {
      line.push_back(',');
      append_double(line, v);
    }
    line.push_back('\n');
    out << line;
  }
}

double riemann_bend(const AnalyticCurve& curve, int N) {
  if (N < 2) throw InvalidInput("riemann_bend: need N >= 2");
  const double h = curve.length / N;
  CompensatedAccumulator acc;
  for (int i = 1; i < N; ++i) {
    const Vec3 second = curve.eval((i - 1) * h) + curve.eval((i + 1) * h) -
                        2.0 * curve.eval(i * h);
    acc.add(second.squaredNorm() / (h * h * h * h));
  }
  return h * acc.value();
}

double riemann_tor(const TwistProfile& twist, int N) {
  if (N < 2) throw InvalidInput("riemann_tor: need N >= 2");
  const double h = twist.length / N;
  CompensatedAccumulator acc;
  for (int i = 1; i < N; ++i) {
    const double diff = twist.eval((i + 0.5) * h) - twist.eval((i - 0.5) * h);
    acc.add(diff * diff / (h * h));
  }
  return h * acc.value();
}

double recovery_frame_distance(const AnalyticCurve& curve, int N,
                               int steps_per_segment) {
  const TwistProfile zero = make_zero_twist(curve.length);
  const FramedDiscreteRod rod = recovery_rod(curve, zero, N);
  const SplineCurve spline(rod.rod, curve.length);

  const FrameField of_spline = integrate_bishop(
      spline, Frame::from_tangent(spline.deriv1(0.0)), steps_per_segment);
  const FrameField of_curve =
      integrate_bishop(curve, spline.knots().ts,
                       Frame::from_tangent(curve.deriv1(0.0)), steps_per_segment);
  for (const Frame& f : of_spline.frames) f.validate();
  for (const Frame& f : of_curve.frames) f.validate();

  return frame_distance_mod_rotation(interior_slice(of_spline, steps_per_segment),
                                     interior_slice(of_curve, steps_per_segment));
}

std::vector<std::pair<int, double>> frame_study(const AnalyticCurve& curve,
                                                const std::vector<int>& Ns) {
  std::vector<std::pair<int, double>> result;
  for (int N : Ns) result.emplace_back(N, recovery_frame_distance(curve, N));
  return result;
}

CounterexampleReport counterexample_spacing(int N) {
  if (N < 3 || N > 400)
    throw InvalidInput("counterexample_spacing: N must lie in [3, 400]");

  std::vector<Vec3> points;
  points.reserve(N + 1);
  points.emplace_back(0.0, 0.0, 0.0);
  for (int i = 1; i < N; ++i)
    points.emplace_back(4.0 * std::pow(2.0, -(N - i)), 0.0, 0.0);
  points.emplace_back(2.0, 1.0, 0.0);

  FramedDiscreteRod rod(DiscreteRod(std::move(points)),
                        std::vector<double>(N, 0.0));

  PenaltyParams params;
  params.alpha = 1.0;
  params.beta = 0.5;
  params.L = 3.0;
  CounterexampleReport report{rod, total_energy(rod, params), 0.0};

  const SplineCurve spline(rod.rod, params.L);
  report.speed_defect = max_speed_defect(spline, 10001);
  return report;
}

std::string counterexample_json(const CounterexampleReport& report) {
  std::ostringstream rod_json;
  write_rod_json(report.rod, rod_json);
  nlohmann::json doc;
  doc["rod"] = nlohmann::json::parse(rod_json.str());
  doc["energy"] = nlohmann::json::parse(energy_report_json(report.energy));
  doc["speed_defect"] = report.speed_defect;
  return doc.dump(2);
}

}  // namespace kirchhoff
