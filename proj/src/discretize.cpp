#include "kirchhoff/discretize.hpp"

#include <cmath>

#include "kirchhoff/numeric.hpp"

namespace kirchhoff {

namespace {

constexpr double kRootFTol = 1e-13;
constexpr double kRootXTol = 1e-13;

void check_curve(const AnalyticCurve& curve, const char* where) {
  if (!(curve.length > 0.0) || !curve.eval)
    throw InvalidInput(std::string(where) + ": curve lacks length or evaluator");
}

void check_small_chord(const AnalyticCurve& curve, double r, const char* where) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw InvalidInput(std::string(where) + ": chord length must be positive");
  if (!(r * curve.sup_deriv2 < 1.0))
    throw InvalidInput(std::string(where) +
                       ": chord length outside the small-chord regime "
                       "(r * sup|u''| must be < 1)");
}

// Crossing search on [s_prev, s_limit]; s_limit may exceed the nominal domain
// when the evaluator extends smoothly (used by the radius solve, whose final
// chord may momentarily overshoot u(L)).
std::optional<double> step_limited(const AnalyticCurve& curve, double s_prev,
                                   double r, double s_limit) {
  auto g = [&curve, s_prev, r](double s) {
    return (curve.eval(s) - curve.eval(s_prev)).norm() - r;
  };
  const double march = 0.25 * r;
  double lo = s_prev;
  double g_lo = -r;
  while (lo < s_limit) {
    const double hi = std::min(lo + march, s_limit);
    const double g_hi = g(hi);
    if (g_hi >= 0.0)
      return find_root(g, lo, hi, kRootFTol, kRootXTol);
    lo = hi;
    g_lo = g_hi;
  }
  (void)g_lo;
  return std::nullopt;
}

}  // namespace

std::optional<double> step(const AnalyticCurve& curve, double s_prev, double r) {
  check_curve(curve, "step");
  check_small_chord(curve, r, "step");
  if (!(s_prev >= 0.0) || !(s_prev <= curve.length))
    throw InvalidInput("step: start parameter outside [0, L]");
  return step_limited(curve, s_prev, r, curve.length);
}

ChordWalk count_segments(const AnalyticCurve& curve, double r) {
  check_curve(curve, "count_segments");
  check_small_chord(curve, r, "count_segments");
  if (!(r <= curve.length))
    throw InvalidInput("count_segments: chord length exceeds curve length");

  ChordWalk walk;
  walk.radius = r;
  walk.params.push_back(0.0);
  const long max_steps = static_cast<long>(4.0 * curve.length / r) + 8;
  while (true) {
    const std::optional<double> next =
        step_limited(curve, walk.params.back(), r, curve.length);
    if (!next) break;
    walk.params.push_back(*next);
    if (static_cast<long>(walk.params.size()) > max_steps)
      throw NumericalError("count_segments: walk failed to terminate");
  }
  walk.terminated =
      curve.length - walk.params.back() > 1e-12 * std::max(1.0, curve.length);
  return walk;
}

namespace {

// Arc-length position after exactly n chords of length r, allowing the final
// chord to run past L into the curve's smooth extension.
double walk_n(const AnalyticCurve& curve, double r, int n) {
  const double limit = curve.length + curve.length / n + 4.0 * r;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::optional<double> next = step_limited(curve, s, r, limit);
    if (!next)
      throw NumericalError("solve_rN: chord walk stalled before n steps");
    s = *next;
  }
  return s;
}

}  // namespace

double solve_rN(const AnalyticCurve& curve, int N) {
  check_curve(curve, "solve_rN");
  if (N < 2) throw InvalidInput("solve_rN: need N >= 2");
  const double h = curve.length / N;
  check_small_chord(curve, h, "solve_rN");

  auto f = [&curve, N](double r) { return walk_n(curve, r, N) - curve.length; };

  const double tol = 1e-12;
  double hi = h;
  const double f_hi = f(hi);
  if (std::abs(f_hi) <= tol) return hi;  // straight curve: chords = arcs
  if (f_hi < 0.0)
    throw NumericalError("solve_rN: upper bracket unexpectedly undershoots");

  double lo = h * (1.0 - h * h * curve.sup_deriv3);
  for (int widen = 0; f(lo) > 0.0; ++widen) {
    if (widen >= 8 || !(lo > 0.0))
      throw NumericalError("solve_rN: failed to bracket the chord length");
    lo = std::max(0.5 * lo, lo - (hi - lo));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

FramedDiscreteRod recovery_rod(const AnalyticCurve& curve,
                               const TwistProfile& twist, int N,
                               double* radius_out) {
  check_curve(curve, "recovery_rod");
  if (!twist.eval) throw InvalidInput("recovery_rod: twist lacks evaluator");
  if (std::abs(curve.length - twist.length) >
      1e-12 * std::max(curve.length, twist.length))
    throw InvalidInput("recovery_rod: curve and twist domains differ");

  const double L = curve.length;
  const double r = solve_rN(curve, N);
  if (radius_out) *radius_out = r;

  std::vector<double> s(N + 1, 0.0);
  const double limit = L + L / N + 4.0 * r;
  for (int i = 1; i <= N; ++i) {
    const std::optional<double> next = step_limited(curve, s[i - 1], r, limit);
    if (!next) throw NumericalError("recovery_rod: chord walk stalled");
    s[i] = *next;
  }
  if (std::abs(s[N] - L) > 1e-9 * std::max(1.0, L))
    throw NumericalError("recovery_rod: chain endpoint misses u(L)");
  s[N] = L;  // snap: the last vertex is exactly u(L)

  std::vector<Vec3> points(N + 1);
  for (int i = 0; i <= N; ++i) points[i] = curve.eval(s[i]);
  std::vector<double> angles(N);
  for (int i = 1; i <= N; ++i) angles[i - 1] = twist.eval(0.5 * (s[i - 1] + s[i]));
  return FramedDiscreteRod(DiscreteRod(std::move(points)), std::move(angles));
}

}  // namespace kirchhoff
