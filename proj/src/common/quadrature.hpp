#pragma once

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "capbound/error.hpp"

namespace capbound::detail {

/// Relative accuracy demanded from closed-form integrands.
inline constexpr double kQuadratureTolerance = 1e-12;
/// Accepted relative error estimate before a result is declared unreliable.
inline constexpr double kQuadratureAcceptance = 1e-10;

/// Adaptive 15-point Gauss-Kronrod over [a, b]; b may be +infinity.
template <class F>
double integrate(F&& f, double a, double b, double tol = kQuadratureTolerance) {
  if (!(b > a)) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 30, tol, &error, &l1);
  if (!std::isfinite(value) || error > kQuadratureAcceptance * std::max(l1, 1e-300)) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge (value " << value
        << ", error estimate " << error << ")";
    throw NumericalError(msg.str());
  }
  return value;
}

/// Integral over [a, b] after x = a + w^2, which turns an integrable
/// (x - a)^{-1/2} endpoint singularity into a smooth integrand.
template <class F>
double integrate_sqrt_endpoint(F&& f, double a, double b, double tol = kQuadratureTolerance) {
  if (!(b > a)) return 0.0;
  const double upper = std::isinf(b) ? std::numeric_limits<double>::infinity() : std::sqrt(b - a);
  return integrate([&](double w) { return w == 0.0 ? 0.0 : 2.0 * w * f(a + w * w); }, 0.0, upper,
                   tol);
}

}  // namespace capbound::detail
