#include "kirchhoff/curves.hpp"

#include <cmath>

#include "kirchhoff/numeric.hpp"

namespace kirchhoff {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw InvalidInput(std::string(what) + " must be positive and finite");
}

}  // namespace

AnalyticCurve make_line(double L) {
  require_positive(L, "make_line: L");
  AnalyticCurve c;
  c.length = L;
  c.eval = [](double s) { return Vec3(s, 0.0, 0.0); };
  c.deriv1 = [](double) { return Vec3(1.0, 0.0, 0.0); };
  c.deriv2 = [](double) { return Vec3::Zero(); };
  c.deriv3 = [](double) { return Vec3::Zero(); };
  c.sup_deriv2 = 0.0;
  c.sup_deriv3 = 0.0;
  c.exact_bend_energy = 0.0;
  return c;
}

AnalyticCurve make_arc(double R, double L) {
  require_positive(R, "make_arc: R");
  require_positive(L, "make_arc: L");
  AnalyticCurve c;
  c.length = L;
  c.eval = [R](double s) {
    return Vec3(R * std::cos(s / R), R * std::sin(s / R), 0.0);
  };
  c.deriv1 = [R](double s) {
    return Vec3(-std::sin(s / R), std::cos(s / R), 0.0);
  };
  c.deriv2 = [R](double s) {
    return Vec3(-std::cos(s / R) / R, -std::sin(s / R) / R, 0.0);
  };
  c.deriv3 = [R](double s) {
    const double R2 = R * R;
    return Vec3(std::sin(s / R) / R2, -std::cos(s / R) / R2, 0.0);
  };
  c.sup_deriv2 = 1.0 / R;
  c.sup_deriv3 = 1.0 / (R * R);
  c.exact_bend_energy = L / (R * R);  // |u''| = 1/R identically
  return c;
}

AnalyticCurve make_helix(double a, double b, double L) {
  require_positive(a, "make_helix: a");
  require_positive(L, "make_helix: L");
  if (!(b >= 0.0) || !std::isfinite(b))
    throw InvalidInput("make_helix: b must be nonnegative and finite");
  const double c2 = a * a + b * b;
  const double c = std::sqrt(c2);
  AnalyticCurve h;
  h.length = L;
  h.eval = [a, b, c](double s) {
    return Vec3(a * std::cos(s / c), a * std::sin(s / c), b * s / c);
  };
  h.deriv1 = [a, b, c](double s) {
    return Vec3(-a / c * std::sin(s / c), a / c * std::cos(s / c), b / c);
  };
  h.deriv2 = [a, c, c2](double s) {
    return Vec3(-a / c2 * std::cos(s / c), -a / c2 * std::sin(s / c), 0.0);
  };
  h.deriv3 = [a, c, c2](double s) {
    const double c3 = c2 * c;
    return Vec3(a / c3 * std::sin(s / c), -a / c3 * std::cos(s / c), 0.0);
  };
  h.sup_deriv2 = a / c2;            // constant curvature
  h.sup_deriv3 = a / (c2 * c);
  h.exact_bend_energy = L * a * a / (c2 * c2);
  return h;
}

TwistProfile make_zero_twist(double L) {
  require_positive(L, "make_zero_twist: L");
  TwistProfile t;
  t.length = L;
  t.eval = [](double) { return 0.0; };
  t.deriv = [](double) { return 0.0; };
  t.exact_tor_energy = 0.0;
  return t;
}

TwistProfile make_linear_twist(double L, double slope) {
  require_positive(L, "make_linear_twist: L");
  if (!std::isfinite(slope))
    throw InvalidInput("make_linear_twist: slope must be finite");
  TwistProfile t;
  t.length = L;
  t.eval = [slope](double s) { return slope * s; };
  t.deriv = [slope](double) { return slope; };
  t.exact_tor_energy = slope * slope * L;
  return t;
}

TwistProfile make_sine_twist(double L) {
  require_positive(L, "make_sine_twist: L");
  TwistProfile t;
  t.length = L;
  t.eval = [](double s) { return std::sin(s); };
  t.deriv = [](double s) { return std::cos(s); };
  // ∫_0^L cos^2 s ds = L/2 + sin(2L)/4
  t.exact_tor_energy = 0.5 * L + 0.25 * std::sin(2.0 * L);
  return t;
}

double continuous_energy(const AnalyticCurve& curve, const TwistProfile& twist) {
  if (!(curve.length > 0.0) || !(twist.length > 0.0))
    throw InvalidInput("continuous_energy: nonpositive domain length");
  if (std::abs(curve.length - twist.length) >
      1e-12 * std::max(curve.length, twist.length))
    throw InvalidInput("continuous_energy: curve and twist domains differ");
  const double L = curve.length;
  double bend;
  if (curve.exact_bend_energy) {
    bend = *curve.exact_bend_energy;
  } else {
    if (!curve.deriv2)
      throw InvalidInput("continuous_energy: curve lacks second derivative");
    bend = adaptive_gl16(
        [&curve](double s) { return curve.deriv2(s).squaredNorm(); }, 0.0, L);
  }
  double tor;
  if (twist.exact_tor_energy) {
    tor = *twist.exact_tor_energy;
  } else {
    if (!twist.deriv)
      throw InvalidInput("continuous_energy: twist lacks derivative");
    tor = adaptive_gl16(
        [&twist](double s) {
          const double d = twist.deriv(s);
          return d * d;
        },
        0.0, L);
  }
  return bend + tor;
}

}  // namespace kirchhoff
