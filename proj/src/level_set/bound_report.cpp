#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "capbound/level_set.hpp"

namespace capbound {

BoundReport bound_report(const TriMesh& mesh, const BoundReportOptions& options) {
  constexpr double kPi = std::numbers::pi;
  BoundReport r;
  r.measures = measure(mesh);
  const SurfaceMeasures& m = r.measures;

  r.lower_volume = std::cbrt(3.0 * m.volume / (4.0 * kPi));
  r.alpha = std::sqrt(m.willmore / (16.0 * kPi));
  r.bray_miao = bray_miao_bound(m.area, m.willmore);
  r.profile_imcf = optimal_profile_bound(ProfileFamily(ImcfProfile{m.area, m.hawking_mass})).bound;

  if (m.hawking_mass > 0.0) {
    r.lower_hawking = m.hawking_mass;
  } else {
    r.lower_hawking_reason = "m_H <= 0: the Hawking mass gives no positive lower bound";
  }

  const double half_h = 0.5 * m.total_mean_curvature;
  const double eps2 = half_h > 0.0 ? 1.0 - 4.0 * kPi * m.area / (half_h * half_h) : -1.0;
  if (m.genus != 0) {
    r.szego_reason = "not convex: genus " + std::to_string(m.genus);
  } else if (m.has_negative_mean_curvature) {
    r.szego_reason = "not convex: negative mean curvature at some vertex";
  } else if (eps2 < -options.minkowski_slack) {
    std::ostringstream msg;
    msg << "not convex-consistent: M^2 < 4 pi area (eps^2 = " << eps2 << ")";
    r.szego_reason = msg.str();
  } else {
    r.convex = true;
    if (eps2 < 0.0) {
      std::ostringstream msg;
      msg << "eps^2 = " << eps2 << " clamped to 0 (discretization)";
      r.szego_reason = msg.str();
      r.szego = szego_bound(half_h * half_h / (4.0 * kPi), half_h);
    } else {
      r.szego = szego_bound(m.area, half_h);
    }
    r.profile_steiner =
        optimal_profile_bound(ProfileFamily(SteinerProfile{m.area, m.total_mean_curvature})).bound;
  }

  if (options.with_bem) {
    r.bem = solve_capacity(mesh, options.tolerance);
    const double c = r.bem->capacity;
    const double allowance = options.tolerance * c;
    r.hawking_check = hawking_capacity_check(m, c, allowance);
    const double upper = r.szego ? std::min(*r.szego, r.bray_miao) : r.bray_miao;
    r.ordering_ok = r.lower_volume <= c + allowance && c - allowance <= upper;
    r.bray_miao_gap = (r.bray_miao - c) / c;
    if (r.szego) r.szego_gap = (*r.szego - c) / c;
  }
  return r;
}

}  // namespace capbound
