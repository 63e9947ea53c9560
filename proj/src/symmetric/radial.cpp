#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "capbound/error.hpp"
#include "capbound/symmetric.hpp"
#include "common/quadrature.hpp"

namespace capbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sqrt(A(s)) / s^2 = 1 / (s^2 sqrt(1 - 2 m(s) / s)).
double radial_integrand(const SymmetricMetric& metric, double s) {
  const double lapse2 = metric.lapse_squared(s);
  return 1.0 / (s * s * std::sqrt(lapse2));
}

// Piece [a, b] after s = a + w^2. The gap s - 2 m(s) is assembled from its
// value at a so that a horizon at a (gap -> 0 like w^2) cancels the Jacobian 2w.
double first_piece(const SymmetricMetric& metric, double a, double b) {
  const double gap_a = a - 2.0 * metric.mass(a);
  const double m_a = metric.mass(a);
  const double upper = std::isinf(b) ? kInf : std::sqrt(b - a);
  return detail::integrate(
      [&](double w) {
        const double s = a + w * w;
        const double gap = gap_a + w * w - 2.0 * (metric.mass(s) - m_a);
        if (!(gap > 0.0)) return 0.0;
        return 2.0 * w * std::sqrt(s) / (s * s * std::sqrt(gap));
      },
      0.0, upper);
}

}  // namespace

double radial_integral(const SymmetricMetric& metric, double a, double b) {
  if (!(a >= metric.r0())) throw InputError("radial integral starts inside the boundary");
  if (!(b > a)) return 0.0;
  std::vector<double> cuts{a};
  for (double knot : metric.knots_beyond_r0()) {
    if (knot > a && knot < b) cuts.push_back(knot);
  }
  cuts.push_back(b);

  double total = first_piece(metric, cuts[0], cuts[1]);
  for (std::size_t k = 1; k + 1 < cuts.size(); ++k) {
    total += detail::integrate([&](double s) { return radial_integrand(metric, s); }, cuts[k],
                               cuts[k + 1]);
  }
  if (!std::isfinite(total)) throw NumericalError("divergent radial integral");
  return total;
}

RadialPotential::RadialPotential(const SymmetricMetric& metric, double boundary_value)
    : metric_(metric), alpha_(boundary_value) {
  if (!(alpha_ >= 0.0 && alpha_ < 1.0)) {
    throw InputError("boundary value alpha must lie in [0, 1)");
  }
  total_ = radial_integral(metric_, metric_.r0(), kInf);
  if (!(total_ > 0.0) || !std::isfinite(total_)) {
    throw NumericalError("divergent radial integral: no harmonic function tends to 1");
  }
  capacity_ = (1.0 - alpha_) / total_;
}

double RadialPotential::operator()(double r) const {
  if (!(r >= metric_.r0())) throw InputError("potential evaluated inside the boundary");
  if (std::isinf(r)) return 1.0;
  return alpha_ + (1.0 - alpha_) * radial_integral(metric_, metric_.r0(), r) / total_;
}

RadialPotential radial_capacity(const SymmetricMetric& metric, double boundary_value) {
  return RadialPotential(metric, boundary_value);
}

SchwarzschildClosedForms schwarzschild_closed_forms(double mass, double r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0) || !std::isfinite(mass)) {
    throw InputError("schwarzschild closed forms need finite m and r0 > 0");
  }
  if (mass > 0.0 && r0 < 2.0 * mass) {
    std::ostringstream msg;
    msg << "r0 = " << r0 << " lies inside the horizon r = 2m = " << 2.0 * mass;
    throw InputError(msg.str());
  }
  SchwarzschildClosedForms out;
  out.mass = mass;
  out.r0 = r0;
  out.v0 = std::sqrt(std::max(0.0, 1.0 - 2.0 * mass / r0));
  // m / (1 - v0) with the cancellation removed; r0 when m = 0.
  out.capacity = 0.5 * r0 * (1.0 + out.v0);
  return out;
}

double SchwarzschildClosedForms::v(double r) const {
  return std::sqrt(std::max(0.0, 1.0 - 2.0 * mass / r));
}

// (v - v0) / (1 - v0) = (1 - r0 / r)(1 + v0) / (v + v0), exact for m = 0 too.
double SchwarzschildClosedForms::u(double r) const {
  if (!(r >= r0)) throw InputError("closed-form u evaluated inside r0");
  if (std::isinf(r)) return 1.0;
  if (r == r0) return 0.0;
  return (1.0 - r0 / r) * (1.0 + v0) / (v(r) + v0);
}

double SchwarzschildClosedForms::f0(double t) const {
  if (!(t >= 0.0)) throw InputError("closed-form f0 needs t >= 0");
  if (std::isinf(t)) return 1.0;
  if (t == 0.0) return 0.0;
  const double shrink = -std::expm1(-0.5 * t);  // 1 - r0 / r(t)
  if (mass == 0.0) return shrink;
  return shrink * (1.0 + v0) / (v(r0 * std::exp(0.5 * t)) + v0);
}

double SchwarzschildClosedForms::phi(double r) const {
  if (!(r >= r0)) throw InputError("closed-form phi evaluated inside r0");
  return 2.0 * std::log(r / r0);
}

}  // namespace capbound
