#pragma once

#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace capbound {

/// Monotonicity-preserving piecewise cubic Hermite interpolant
/// (Fritsch-Carlson slopes). On every interval the derivative has the sign of
/// the data difference, and it vanishes at local extrema of the data.
class MonotoneSpline {
 public:
  MonotoneSpline(std::vector<double> x, std::vector<double> y);

  /// Clamped: constant beyond the last knot, and the derivative is 0 there.
  double value(double x) const;
  double derivative(double x) const;

  std::span<const double> knots() const { return x_; }
  std::span<const double> values() const { return y_; }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_, y_, slope_;
};

/// Rotationally symmetric, asymptotically flat metric on [r0, inf) x S^2:
///   g = A(r) dr^2 + r^2 dsigma^2,  A(r) = 1 / (1 - 2 m(r) / r).
/// Geometric units (G = c = 1).
class SymmetricMetric {
 public:
  struct Flat {};
  struct Schwarzschild {
    double mass = 0.0;
  };
  using Tabulated = MonotoneSpline;
  using MassFunction = std::variant<Flat, Schwarzschild, Tabulated>;

  static SymmetricMetric flat(double r0);
  static SymmetricMetric schwarzschild(double mass, double r0);
  /// Mass samples m(r_k); r0 defaults to the first sample radius and must lie
  /// within [r_first, r_last]. m is constant beyond the last sample.
  static SymmetricMetric tabulated(std::vector<double> r, std::vector<double> m,
                                   double r0 = std::numeric_limits<double>::quiet_NaN());

  double r0() const { return r0_; }
  const MassFunction& mass_function() const { return mass_fn_; }
  std::string kind_name() const;

  double mass(double r) const;
  double mass_derivative(double r) const;
  /// 1 - 2 m(r) / r = 1 / A(r); zero only at a horizon boundary r = r0.
  double lapse_squared(double r) const;
  double metric_factor(double r) const { return 1.0 / lapse_squared(r); }

  /// Mass function constant on [r0, inf), i.e. a Schwarzschild exterior.
  bool is_schwarzschild() const;
  bool is_horizon() const;
  /// Tabulated knot radii inside (r0, inf); empty for presets.
  std::vector<double> knots_beyond_r0() const;

 private:
  SymmetricMetric(double r0, MassFunction fn);
  void validate() const;

  double r0_;
  MassFunction mass_fn_;
};

/// Tabulated mass function from CSV with header "r,m" and strictly increasing r.
SymmetricMetric load_mass_function_csv(const std::filesystem::path& path,
                                       double r0 = std::numeric_limits<double>::quiet_NaN());
SymmetricMetric parse_mass_function_csv(std::string_view text,
                                        double r0 = std::numeric_limits<double>::quiet_NaN());

/// Geometry of the coordinate sphere {r} (H = k1 + k2 convention).
struct SphereGeometry {
  double radius = 0.0;
  double area = 0.0;              ///< 4 pi r^2
  double mean_curvature = 0.0;    ///< (2 / r) sqrt(1 / A)
  double willmore = 0.0;          ///< H^2 * area
  double hawking_mass = 0.0;      ///< from the full Hawking-mass formula
  double scalar_curvature = 0.0;  ///< 4 m'(r) / r^2
};

SphereGeometry geometry_at(const SymmetricMetric& metric, double r);

/// Radial harmonic function u with u(r0) = boundary_value, u -> 1 at infinity:
///   u(r) = alpha + (1 - alpha) I(r0, r) / I(r0, inf),  I(a, b) = int_a^b sqrt(A(s)) / s^2 ds,
/// and u = 1 - capacity / r + O(1/r^2) with capacity = (1 - alpha) / I(r0, inf).
class RadialPotential {
 public:
  RadialPotential(const SymmetricMetric& metric, double boundary_value);

  double capacity() const { return capacity_; }
  double boundary_value() const { return alpha_; }
  double total_integral() const { return total_; }
  double operator()(double r) const;

 private:
  SymmetricMetric metric_;
  double alpha_;
  double total_;
  double capacity_;
};

/// alpha = 0 gives the capacity C_M of the boundary sphere.
RadialPotential radial_capacity(const SymmetricMetric& metric, double boundary_value = 0.0);

/// Integral of sqrt(A(s)) / s^2 over [a, b] (b may be +infinity), with the
/// substitution s = a + w^2 absorbing a horizon singularity at a.
double radial_integral(const SymmetricMetric& metric, double a, double b);

/// Closed-form harmonic function, capacity and IMCF data for the spatial
/// Schwarzschild exterior of mass m outside r0.
struct SchwarzschildClosedForms {
  double mass = 0.0;
  double r0 = 0.0;
  double v0 = 0.0;        ///< v(r0)
  double capacity = 0.0;  ///< m / (1 - v(r0)), or r0 when m = 0

  double v(double r) const;      ///< sqrt(1 - 2m / r)
  double u(double r) const;      ///< (v - v0) / (1 - v0), or 1 - r0 / r when m = 0
  double f0(double t) const;     ///< u as a function of IMCF time
  double phi(double r) const;    ///< IMCF time of the sphere r: 2 log(r / r0)
};

SchwarzschildClosedForms schwarzschild_closed_forms(double mass, double r0);

/// lim (r / 2)(1 - 1 / A(r)) as r -> inf, cross-checked against the flux
/// integral specialisation (r / 2)(A(r) - 1).
double adm_mass(const SymmetricMetric& metric);

struct RadialSample {
  double t = 0.0;
  SphereGeometry geometry;
};

/// Coordinate spheres r(t) = r0 e^{t/2} along the inverse mean curvature flow.
struct RadialScan {
  std::vector<RadialSample> samples;
  bool hawking_monotone = true;
  bool scalar_nonnegative = true;
  /// [r_k, r_{k+1}] intervals over which m_H decreases.
  std::vector<std::pair<double, double>> hawking_decreasing;
  /// Sample radii with R < 0.
  std::vector<double> negative_scalar_radii;
};

/// Samples `steps` uniform flow times in [0, t_max], plus every tabulated knot
/// and knot-interval midpoint the flow crosses, so that sign changes of m'
/// cannot fall between samples.
RadialScan imcf_trace(const SymmetricMetric& metric, double t_max, int steps);

struct MassBoundCheck {
  bool hypothesis_ok = false;  ///< boundary Hawking mass >= 0
  double mass = 0.0;           ///< ADM mass
  double boundary_hawking_mass = 0.0;
  double alpha = 0.0;          ///< sqrt(willmore(r0) / 16 pi) = sqrt(1 / A(r0))
  double capacity = 0.0;       ///< C_M(boundary)
  double scaled_capacity = 0.0;  ///< (1 - alpha) C_M, the alpha-potential coefficient
  bool holds = false;          ///< mass >= scaled_capacity - 1e-9
  bool equality = false;       ///< |mass - scaled_capacity| < 1e-9 on a Schwarzschild exterior
};

MassBoundCheck mass_bound_check(const SymmetricMetric& metric);

struct StaticCheck {
  double min_lapse_squared = 0.0;  ///< min N^2 on the boundary, N = sqrt(1 - 2m/r)
  double willmore_term = 0.0;      ///< (1 / 16 pi) integral H^2 over the boundary
  bool equality = false;
};

/// Compares min N^2 with the boundary Willmore term on the Schwarzschild
/// static family (m >= 0, r0 >= 2m).
StaticCheck static_check(double mass, double r0);

}  // namespace capbound
