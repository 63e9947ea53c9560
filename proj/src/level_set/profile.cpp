#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "capbound/error.hpp"
#include "capbound/level_set.hpp"
#include "common/quadrature.hpp"

namespace capbound {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 - m0 sqrt(16 pi / A0) e^{-t/2}, written to stay accurate near the horizon
// where both terms are close to 1.
double imcf_inner(const ImcfProfile& p, double t) {
  const double k = p.hawking_mass * std::sqrt(16.0 * kPi / p.area);
  return (1.0 - k) - k * std::expm1(-0.5 * t);
}

double imcf_T(const ImcfProfile& p, double t) {
  const double r0 = std::sqrt(p.area / (4.0 * kPi));
  return 2.0 * r0 * std::exp(0.5 * t) * std::sqrt(std::max(0.0, imcf_inner(p, t)));
}

// Linear interpolant of 1/T between samples.
double tabulated_inverse(const TabulatedProfile& p, double t) {
  const auto it = std::upper_bound(p.t.begin(), p.t.end(), t);
  if (it == p.t.end()) return std::exp(-(t - p.t.back())) / p.value.back();
  const std::size_t k = static_cast<std::size_t>(it - p.t.begin());
  if (k == 0) return 1.0 / p.value.front();
  const double s = (t - p.t[k - 1]) / (p.t[k] - p.t[k - 1]);
  return (1.0 - s) / p.value[k - 1] + s / p.value[k];
}

void validate(const SteinerProfile& p) {
  if (!(p.area > 0.0) || !std::isfinite(p.total_mean_curvature)) {
    throw InputError("steiner profile needs area > 0 and finite total mean curvature");
  }
  // 4 pi t^2 + H t + A stays positive on [0, inf) unless its minimum dips below zero.
  const double h = p.total_mean_curvature;
  if (h < 0.0 && p.area - h * h / (16.0 * kPi) <= 0.0) {
    throw InputError("nonpositive T: steiner profile vanishes at t = " +
                     std::to_string(-h / (8.0 * kPi)));
  }
}

void validate(const ImcfProfile& p) {
  if (!(p.area > 0.0) || !std::isfinite(p.hawking_mass)) {
    throw InputError("imcf profile needs area > 0 and finite Hawking mass");
  }
  // T(0) = 0 exactly at a horizon (r0 = 2 m0); 1/T is still integrable there.
  if (imcf_inner(p, 0.0) < -1e-12) {
    std::ostringstream msg;
    msg << "nonpositive T: imcf profile needs 1 - m0 sqrt(16 pi / A0) >= 0 (m0 = "
        << p.hawking_mass << ", A0 = " << p.area << ")";
    throw InputError(msg.str());
  }
}

void validate(const TabulatedProfile& p) {
  if (p.t.size() != p.value.size() || p.t.size() < 2) {
    throw InputError("tabulated profile needs at least two (t, T) samples");
  }
  if (p.t.front() != 0.0) throw InputError("tabulated profile must start at t = 0");
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    if (k > 0 && !(p.t[k] > p.t[k - 1])) {
      throw InputError("tabulated profile needs strictly increasing t");
    }
    if (!(p.value[k] > 0.0) || !std::isfinite(p.value[k])) {
      throw InputError("nonpositive T in tabulated profile at t = " + std::to_string(p.t[k]));
    }
  }
}

}  // namespace

ProfileFamily::ProfileFamily(Kind kind) : kind_(std::move(kind)) {
  std::visit([](const auto& p) { validate(p); }, kind_);
}

std::string ProfileFamily::kind_name() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SteinerProfile>) return "steiner";
        else if constexpr (std::is_same_v<P, ImcfProfile>) return "imcf";
        else return "tabulated";
      },
      kind_);
}

double ProfileFamily::T(double t) const {
  if (!(t >= 0.0)) throw InputError("profile evaluated at negative t");
  return std::visit(
      [t](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SteinerProfile>) {
          return (p.area + t * p.total_mean_curvature + 4.0 * kPi * t * t) / (4.0 * kPi);
        } else if constexpr (std::is_same_v<P, ImcfProfile>) {
          return imcf_T(p, t);
        } else {
          return 1.0 / tabulated_inverse(p, t);
        }
      },
      kind_);
}

double ProfileFamily::inverse_integral(double t) const {
  if (!(t >= 0.0)) throw InputError("profile integral needs t >= 0");
  if (const auto* tab = std::get_if<TabulatedProfile>(&kind_)) {
    double sum = 0.0;
    for (std::size_t k = 1; k < tab->t.size(); ++k) {
      const double a = tab->t[k - 1];
      if (t <= a) return sum;
      const double b = std::min(t, tab->t[k]);
      sum += 0.5 * (b - a) * (1.0 / tab->value[k - 1] + tabulated_inverse(*tab, b));
    }
    const double beyond = t - tab->t.back();
    // Exponential tail integrated in closed form.
    return sum + (std::isinf(t) ? 1.0 : -std::expm1(-beyond)) / tab->value.back();
  }
  const double value = detail::integrate_sqrt_endpoint([this](double s) { return 1.0 / T(s); },
                                                       0.0, t);
  if (!std::isfinite(value)) throw NumericalError("divergent integral of 1/T");
  return value;
}

double ProfileFamily::energy(const std::function<double(double)>& f_prime) const {
  if (const auto* tab = std::get_if<TabulatedProfile>(&kind_)) {
    double sum = 0.0;
    for (std::size_t k = 1; k < tab->t.size(); ++k) {
      const double a = tab->t[k - 1], b = tab->t[k];
      const double ga = f_prime(a), gb = f_prime(b);
      sum += 0.5 * (b - a) * (ga * ga * tab->value[k - 1] + gb * gb * tab->value[k]);
    }
    const double t_max = tab->t.back();
    const double tail = detail::integrate(
        [&](double t) {
          const double g = f_prime(t);
          // Log form: g^2 underflows and e^{t - t_max} overflows in the far tail.
          return g == 0.0 ? 0.0
                          : std::exp(2.0 * std::log(std::abs(g)) + std::log(tab->value.back()) +
                                     (t - t_max));
        },
        t_max, std::numeric_limits<double>::infinity());
    return sum + tail;
  }
  return detail::integrate_sqrt_endpoint(
      [&](double t) {
        const double g = f_prime(t);
        if (g == 0.0) return 0.0;
        const double value = T(t);
        // T overflows only where a finite-energy derivative has long underflowed.
        return std::isinf(value) ? 0.0 : g * g * value;
      },
      0.0, std::numeric_limits<double>::infinity());
}

ProfileBound optimal_profile_bound(const ProfileFamily& family) {
  const double total = family.inverse_integral(std::numeric_limits<double>::infinity());
  if (!std::isfinite(total) || !(total > 0.0)) {
    throw NumericalError("divergent integral of 1/T: the family gives no useful bound");
  }
  return {1.0 / total, 1.0 / total};
}

double evaluate_optimal_f(const ProfileFamily& family, double t) {
  if (!(t >= 0.0)) throw InputError("optimal profile needs t >= 0");
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  const double lambda = optimal_profile_bound(family).lambda;
  return std::min(1.0, lambda * family.inverse_integral(t));
}

double evaluate_optimal_f_prime(const ProfileFamily& family, double t) {
  return optimal_profile_bound(family).lambda / family.T(t);
}

}  // namespace capbound
