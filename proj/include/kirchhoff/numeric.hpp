#pragma once

#include <functional>
#include <vector>

#include "kirchhoff/types.hpp"

namespace kirchhoff {

// Compensated accumulator (Kahan-Babuska-Neumaier).  Used wherever a sum
// feeds an exactness invariant, so that the result does not depend on
// summation order pitfalls; unlike plain Kahan it also survives terms larger
// than the running sum.
class CompensatedAccumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double compensated_sum(const std::vector<double>& xs);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
// Computed by Newton iteration on the Legendre recurrence; results for the
// rule sizes used in hot paths (16, 32) are cached after first use.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const QuadratureRule& gauss_legendre(int n);

// Integrate f over [a, b] with a single n-point Gauss-Legendre panel.
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n);

// Composite 16-point Gauss-Legendre integration with panel doubling.
// The panel count doubles until two successive estimates agree to rel_tol
// (relative) or abs_tol (absolute), whichever is looser at that magnitude.
double adaptive_gl16(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-12, double abs_tol = 1e-14);

// Root of f on the bracket [lo, hi] (f(lo) and f(hi) of opposite sign or one
// of them zero) via the Illinois variant of regula falsi with a bisection
// fallback.  Converges to |f| <= ftol or bracket width <= xtol.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double ftol, double xtol);

// Argmin of a unimodal f on [lo, hi] by golden-section search, to interval
// width tol.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol);

}  // namespace kirchhoff
