// Micro-benchmark of the OpenMP energy/sampling kernels against their serial
// reference implementations.  Each kernel is timed best-of-three and the two
// results must agree to 1e-12 relative; any disagreement makes the benchmark
// fail, so it doubles as a consistency check at sizes the unit tests do not
// reach.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kirchhoff/energy.hpp"
#include "kirchhoff/rod.hpp"
#include "kirchhoff/spline.hpp"

namespace {

using kirchhoff::DiscreteRod;
using kirchhoff::FramedDiscreteRod;
using kirchhoff::SplineCurve;
using kirchhoff::Vec3;

// Helix samples at equal arc increments: nearly-equal chords, nonzero
// curvature everywhere, so every kernel does real work.
FramedDiscreteRod make_big_rod(int edges) {
  const double a = 1.0, b = 0.5;
  const double c = std::sqrt(a * a + b * b);
  const double L = 40.0;
  std::vector<Vec3> points(edges + 1);
  std::vector<double> angles(edges);
  for (int i = 0; i <= edges; ++i) {
    const double s = L * i / edges;
    points[i] = Vec3(a * std::cos(s / c), a * std::sin(s / c), b * s / c);
  }
  for (int i = 0; i < edges; ++i) angles[i] = std::sin(L * (i + 0.5) / edges);
  return FramedDiscreteRod(DiscreteRod(std::move(points)), std::move(angles));
}

double time_best_of(int reps, const std::function<double()>& fn, double* result) {
  double best = 1e300;
  for (int rep = 0; rep < reps; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    *result = fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

bool report(const std::string& name, const std::function<double()>& serial,
            const std::function<double()>& parallel) {
  double serial_value = 0.0, parallel_value = 0.0;
  const double serial_ms = time_best_of(3, serial, &serial_value);
  const double parallel_ms = time_best_of(3, parallel, &parallel_value);
  const double denom = std::max({1.0, std::abs(serial_value)});
  const double rel = std::abs(serial_value - parallel_value) / denom;
  const bool ok = rel <= 1e-12;
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   "
              "rel diff %.2e %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              rel, ok ? "" : "MISMATCH");
  return ok;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel kernels run serially\n");
#endif

  const FramedDiscreteRod rod = make_big_rod(1000000);
  const FramedDiscreteRod spline_rod = make_big_rod(300000);
  const SplineCurve spline(spline_rod.rod, 40.0);
  const int speed_samples = 2000000;

  bool ok = true;
  ok &= report("bend_local_sum",
               [&] { return kirchhoff::serial::bend_local_sum(rod.rod); },
               [&] { return kirchhoff::bend_local_sum(rod.rod); });
  ok &= report("tor_local_sum",
               [&] { return kirchhoff::serial::tor_local_sum(rod); },
               [&] { return kirchhoff::tor_local_sum(rod); });
  ok &= report("segment_bend_sum",
               [&] { return kirchhoff::serial::segment_bend_sum(spline); },
               [&] { return kirchhoff::segment_bend_sum(spline); });
  ok &= report("max_speed_defect",
               [&] {
                 return kirchhoff::serial::max_speed_defect(spline, speed_samples);
               },
               [&] { return kirchhoff::max_speed_defect(spline, speed_samples); });

  if (!ok) {
    std::printf("FAIL: serial and parallel kernels disagree\n");
    return 1;
  }
  std::printf("all kernels agree to 1e-12 relative\n");
  return 0;
}
