#include "kirchhoff/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace kirchhoff {

double compensated_sum(const std::vector<double>& xs) {
  CompensatedAccumulator acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

namespace {

// Legendre polynomial P_n and derivative P_n' at x via the three-term
// recurrence.
void legendre(int n, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = n * (x * p1 - p0) / (x * x - 1.0);
}

QuadratureRule compute_gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int k = 0; k < m; ++k) {
    // Chebyshev-based initial guess for the k-th positive root.
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, &p, &dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[k] = -x;
    rule.nodes[n - 1 - k] = x;
    rule.weights[k] = w;
    rule.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // exact midpoint for odd rules
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidInput("gauss_legendre: rule size must be >= 1");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n) {
  const QuadratureRule& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CompensatedAccumulator acc;
  for (int k = 0; k < n; ++k)
    acc.add(rule.weights[k] * f(mid + half * rule.nodes[k]));
  return half * acc.value();
}

double adaptive_gl16(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol) {
  if (!(b >= a)) throw InvalidInput("adaptive_gl16: requires b >= a");
  if (a == b) return 0.0;
  double previous = gl_integrate(f, a, b, 16);
  for (int panels = 2; panels <= (1 << 20); panels *= 2) {
    const double h = (b - a) / panels;
    CompensatedAccumulator acc;
    for (int i = 0; i < panels; ++i)
      acc.add(gl_integrate(f, a + i * h, a + (i + 1) * h, 16));
    const double current = acc.value();
    if (std::abs(current - previous) <=
        std::max(abs_tol, rel_tol * std::abs(current)))
      return current;
    previous = current;
  }
  throw NumericalError("adaptive_gl16: panel doubling did not converge");
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double ftol, double xtol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NumericalError("find_root: endpoints do not bracket a root");
  // Illinois method: regula-falsi with stale-endpoint weight halving, plus a
  // bisection step whenever the secant point degenerates.
  int stale = 0;  // -1 if lo is stale, +1 if hi is stale
  for (int it = 0; it < 200; ++it) {
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (std::abs(fx) <= ftol || (hi - lo) <= xtol) return x;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
      if (stale == -1) flo *= 0.5;
      stale = -1;
    } else {
      lo = x;
      flo = fx;
      if (stale == 1) fhi *= 0.5;
      stale = 1;
    }
  }
  throw NumericalError("find_root: did not converge in 200 iterations");
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace kirchhoff
