#include <cmath>
#include <numbers>
#include <sstream>

#include "capbound/error.hpp"
#include "capbound/level_set.hpp"

namespace capbound {

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

double szego_bound(double area, double half_mean_curvature) {
  if (!(area > 0.0)) throw InputError("szego bound needs area > 0");
  if (!(half_mean_curvature > 0.0)) throw InputError("szego bound needs M > 0");
  const double m = half_mean_curvature;
  double eps2 = 1.0 - 4.0 * kPi * area / (m * m);
  if (eps2 < 0.0) {
    if (eps2 < -1e-12) {
      std::ostringstream msg;
      msg << "not convex-consistent input: M^2 < 4 pi area (eps^2 = " << eps2 << ")";
      throw InputError(msg.str());
    }
    eps2 = 0.0;
  }
  const double eps = std::sqrt(eps2);
  // 2 eps / log((1 + eps) / (1 - eps)) = eps / atanh(eps), which tends to 1 as eps -> 0.
  const double ratio = eps < 1e-4 ? 1.0 - eps2 / 3.0 - 4.0 * eps2 * eps2 / 45.0 : eps / std::atanh(eps);
  return m / (4.0 * kPi) * ratio;
}

double bray_miao_bound(double area, double willmore) {
  if (!(area > 0.0)) throw InputError("bray-miao bound needs area > 0");
  if (!(willmore >= 0.0)) throw InputError("bray-miao bound needs willmore >= 0");
  return std::sqrt(area / (16.0 * kPi)) * (1.0 + std::sqrt(willmore / (16.0 * kPi)));
}

double imcf_closed_form_bound(double area, double hawking_mass) {
  if (!(area > 0.0)) throw InputError("imcf bound needs area > 0");
  const double r0 = std::sqrt(area / (4.0 * kPi));
  const double lapse2 = 1.0 - 2.0 * hawking_mass / r0;
  if (lapse2 < -1e-12) {
    std::ostringstream msg;
    msg << "metric undefined: r0 = " << r0 << " < 2 m0 = " << 2.0 * hawking_mass;
    throw InputError(msg.str());
  }
  if (hawking_mass == 0.0) return r0;
  // m0 / (1 - v) rewritten as r0 (1 + v) / 2 using 1 - v^2 = 2 m0 / r0; no cancellation for small m0.
  const double v = std::sqrt(std::max(0.0, lapse2));
  return 0.5 * r0 * (1.0 + v);
}

HawkingCapacityCheck hawking_capacity_check(const SurfaceMeasures& measures, double capacity,
                                            double tolerance) {
  if (!(capacity > 0.0)) throw InputError("hawking capacity check needs capacity > 0");
  HawkingCapacityCheck out;
  out.alpha = std::sqrt(measures.willmore / (16.0 * kPi));
  out.lhs = std::abs(measures.hawking_mass);
  out.rhs = std::abs(1.0 - out.alpha) * capacity;
  out.holds = out.lhs >= out.rhs - tolerance;
  return out;
}

}  // namespace capbound
