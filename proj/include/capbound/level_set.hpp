#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "capbound/bem.hpp"
#include "capbound/mesh.hpp"

namespace capbound {

/// Parallel surfaces of a convex body: T(t) = (area + t * integral H + 4 pi t^2) / 4 pi.
struct SteinerProfile {
  double area = 0.0;
  double total_mean_curvature = 0.0;
};

/// Inverse-mean-curvature-flow comparison profile of a surface with area A0
/// and Hawking mass m0:
///   T(t) = sqrt(16 pi A0 e^t (1 - m0 sqrt(16 pi / A0) e^{-t/2})) / 4 pi.
struct ImcfProfile {
  double area = 0.0;
  double hawking_mass = 0.0;
};

/// Samples (t_k, T_k) from t_0 = 0 to t_max, continued beyond t_max by
/// T(t) = T(t_max) e^{t - t_max}. Integrals use the trapezoid rule on 1/T
/// plus the closed-form tail.
struct TabulatedProfile {
  std::vector<double> t;
  std::vector<double> value;
};

/// One-parameter family t -> T(t) > 0 on [0, inf) driving the 1-D variational bound
///   C <= inf_f integral f'(t)^2 T(t) dt,  f(0) = 0, f(inf) = 1.
class ProfileFamily {
 public:
  using Kind = std::variant<SteinerProfile, ImcfProfile, TabulatedProfile>;

  /// Validates the family (T > 0 on [0, inf), convergent integral of 1/T);
  /// throws InputError otherwise.
  explicit ProfileFamily(Kind kind);

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;

  double T(double t) const;

  /// Integral of 1/T over [0, t]; t may be +infinity.
  double inverse_integral(double t) const;

  /// Integral of f'(t)^2 T(t) over [0, inf) for a given derivative f'.
  /// Uses the same quadrature as inverse_integral so that the optimal
  /// profile reproduces the bound to rounding.
  double energy(const std::function<double(double)>& f_prime) const;

 private:
  Kind kind_;
};

struct ProfileBound {
  double bound = 0.0;   ///< (integral of 1/T)^{-1}
  double lambda = 0.0;  ///< scale of the optimal profile f = lambda * integral_0^t 1/T
};

ProfileBound optimal_profile_bound(const ProfileFamily& family);

/// Minimiser f(t) = lambda * integral_0^t 1/T; f(0) = 0, f(inf) = 1.
double evaluate_optimal_f(const ProfileFamily& family, double t);
/// Derivative of the minimiser, lambda / T(t).
double evaluate_optimal_f_prime(const ProfileFamily& family, double t);

/// Capacity bound from parallel surfaces of a convex surface with
/// half total mean curvature `half_mean_curvature` (M = integral H / 2):
/// (M / 4 pi) * 2 eps / log((1 + eps) / (1 - eps)), eps^2 = 1 - 4 pi area / M^2.
/// Throws InputError when eps^2 < 0 (input not consistent with a convex surface).
double szego_bound(double area, double half_mean_curvature);

/// sqrt(area / 16 pi) * (1 + sqrt(willmore / 16 pi)).
double bray_miao_bound(double area, double willmore);

/// Infimum of the IMCF profile energy in closed form: m0 / (1 - v(r0)) with
/// r0 = sqrt(area / 4 pi), v = sqrt(1 - 2 m0 / r0); r0 when m0 = 0.
/// Throws InputError when r0 < 2 m0.
double imcf_closed_form_bound(double area, double hawking_mass);

struct HawkingCapacityCheck {
  double lhs = 0.0;  ///< |m_H|
  double rhs = 0.0;  ///< |1 - alpha| * capacity
  double alpha = 0.0;
  bool holds = false;
};

/// |m_H| >= |1 - alpha| C with alpha = sqrt(willmore / 16 pi).
HawkingCapacityCheck hawking_capacity_check(const SurfaceMeasures& measures, double capacity,
                                            double tolerance = 1e-9);

struct BoundReportOptions {
  bool with_bem = false;
  /// Collocation residual tolerance, also the relative BEM error allowance
  /// used for the ordering check.
  double tolerance = 1e-2;
  /// Discrete curvature can push a sphere-like mesh slightly past
  /// M^2 = 4 pi area; eps^2 in [-minkowski_slack, 0) is treated as 0.
  double minkowski_slack = 1e-2;
};

struct BoundReport {
  SurfaceMeasures measures;
  std::optional<CapacitySolution> bem;
  double lower_volume = 0.0;  ///< (3 V / 4 pi)^{1/3}
  /// m_H itself bounds C from below when positive; never in flat space.
  std::optional<double> lower_hawking;
  std::string lower_hawking_reason;
  std::optional<double> szego;
  std::string szego_reason;  ///< why szego is absent, or a note on clamping
  double bray_miao = 0.0;
  double alpha = 0.0;
  /// Steiner (parallel-surface) profile bound, convex surfaces only.
  std::optional<double> profile_steiner;
  /// IMCF profile bound with A0 = area, m0 = m_H; equals bray_miao.
  double profile_imcf = 0.0;
  std::optional<HawkingCapacityCheck> hawking_check;
  bool convex = false;  ///< genus 0, no negative H, eps^2 admissible
  /// lower_volume <= C_bem <= min(szego, bray_miao), each within the BEM allowance.
  std::optional<bool> ordering_ok;
  std::optional<double> bray_miao_gap;  ///< (bray_miao - C_bem) / C_bem
  std::optional<double> szego_gap;      ///< (szego - C_bem) / C_bem
};

BoundReport bound_report(const TriMesh& mesh, const BoundReportOptions& options = {});

}  // namespace capbound
