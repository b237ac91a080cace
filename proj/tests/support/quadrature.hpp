#pragma once

// Test-only quadrature oracle for the limit-law CDFs. It integrates the
// densities as written (1/(pi sqrt(x(1-x))), (2/pi) sqrt(x/(1-x)),
// (2/pi) sqrt((1-x)/x)) and never touches the closed-form antiderivatives.

#include <cmath>
#include <functional>
#include <numbers>

#include "sojourn/limit_laws.hpp"

namespace sojourn::testing {

inline double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                           double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int max_depth = 50) {
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

inline double raw_density(limits::Law law, double x) {
  constexpr double pi = std::numbers::pi;
  switch (law) {
    case limits::Law::Arcsine:
      return 1.0 / (pi * std::sqrt(x * (1.0 - x)));
    case limits::Law::MpPositive:
      return 2.0 / pi * std::sqrt(x / (1.0 - x));
    case limits::Law::MpNegative:
      return 2.0 / pi * std::sqrt((1.0 - x) / x);
  }
  return 0.0;
}

/// Integrand after x = sin^2(theta), dx = sin(2 theta) d theta. At the two
/// endpoints the density is singular (or 0/0) and the factor sin(2 theta)
/// vanishes, so the finite limits are supplied directly.
inline double transformed_integrand(limits::Law law, double theta) {
  constexpr double pi = std::numbers::pi;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  if (s == 0.0 || c < 1e-300 || theta >= pi / 2) {
    const bool at_zero = s == 0.0;
    switch (law) {
      case limits::Law::Arcsine:
        return 2.0 / pi;
      case limits::Law::MpPositive:
        return at_zero ? 0.0 : 4.0 / pi;
      case limits::Law::MpNegative:
        return at_zero ? 4.0 / pi : 0.0;
    }
  }
  return raw_density(law, s * s) * std::sin(2.0 * theta);
}

/// Integral of the density from 0 to r by quadrature in theta.
inline double quadrature_cdf(limits::Law law, double r, double tol = 1e-10) {
  if (r <= 0.0) {
    return 0.0;
  }
  const double upper = std::asin(std::sqrt(std::min(r, 1.0)));
  return adaptive_simpson([law](double t) { return transformed_integrand(law, t); }, 0.0, upper,
                          tol);
}

}  // namespace sojourn::testing
