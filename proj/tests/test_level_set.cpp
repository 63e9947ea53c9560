#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "capbound/error.hpp"
#include "capbound/level_set.hpp"
#include "capbound/symmetric.hpp"

using namespace capbound;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

TabulatedProfile exponential_table(double t_max, int samples) {
  TabulatedProfile p;
  for (int k = 0; k < samples; ++k) {
    const double t = t_max * k / (samples - 1);
    p.t.push_back(t);
    p.value.push_back(std::exp(t));
  }
  return p;
}

// Positive, eventually exponential profile with random wiggles.
TabulatedProfile random_table(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double scale = 0.5 + 2.0 * u(rng);
  const double amp = 0.6 * u(rng);
  const double freq = 0.5 + 3.0 * u(rng);
  const double growth = 0.5 + u(rng);
  TabulatedProfile p;
  const int n = 401;
  for (int k = 0; k < n; ++k) {
    const double t = 12.0 * k / (n - 1);
    p.t.push_back(t);
    p.value.push_back(scale * std::exp(growth * t) * (1.0 + amp * std::sin(freq * t)));
  }
  return p;
}

// Admissible perturbation eps * g with g(0) = 0 and g -> 0 at infinity.
struct Bump {
  double eps, power, decay;
  double derivative(double t) const {
    if (t == 0.0) return power == 1.0 ? eps : 0.0;
    if (std::isinf(t)) return 0.0;
    // Log form keeps the product finite for large t.
    return eps * (power / t - 1.0 / decay) * std::exp(power * std::log(t) - t / decay);
  }
};

}  // namespace

TEST_CASE("steiner profile of the unit sphere gives 1") {
  const ProfileFamily f(SteinerProfile{4.0 * kPi, 8.0 * kPi});
  CHECK(f.T(1.0) == doctest::Approx(4.0));
  CHECK(optimal_profile_bound(f).bound == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(optimal_profile_bound(f).lambda == optimal_profile_bound(f).bound);
}

TEST_CASE("imcf profile of the flat unit sphere gives 1") {
  const ProfileFamily f(ImcfProfile{4.0 * kPi, 0.0});
  CHECK(optimal_profile_bound(f).bound == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(evaluate_optimal_f(f, 2.0 * std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(evaluate_optimal_f(f, 0.0) == 0.0);
}

TEST_CASE("tabulated e^t with exponential tail gives 1") {
  const ProfileFamily f(exponential_table(40.0, 200001));
  CHECK(std::abs(optimal_profile_bound(f).bound - 1.0) < 1e-8);
}

TEST_CASE("optimal f tends to 1 for the horizon-free Schwarzschild profile") {
  const ProfileFamily f(ImcfProfile{64.0 * kPi, 1.0});
  CHECK(evaluate_optimal_f(f, 0.0) == 0.0);
  CHECK(evaluate_optimal_f(f, 80.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(evaluate_optimal_f(f, kInf) == 1.0);
  double prev = 0.0;
  for (double t = 0.25; t < 20.0; t += 0.25) {
    const double v = evaluate_optimal_f(f, t);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("optimal imcf profile agrees with the closed-form f0") {
  for (double m : {-1.0, -0.2, 0.0, 0.5, 1.0}) {
    for (double r0 : {2.0, 3.0, 4.0, 10.0}) {
      if (m > 0.0 && r0 < 2.0 * m) continue;
      const ProfileFamily f(ImcfProfile{4.0 * kPi * r0 * r0, m});
      const SchwarzschildClosedForms cf = schwarzschild_closed_forms(m, r0);
      for (double t : {0.1, 0.5, 1.0, 3.0, 7.0, 15.0}) {
        CHECK(std::abs(evaluate_optimal_f(f, t) - cf.f0(t)) < 1e-9);
      }
    }
  }
}

TEST_CASE("szego bound examples") {
  CHECK(szego_bound(4.0 * kPi, 4.0 * kPi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(szego_bound(16.0 * kPi, 8.0 * kPi) == doctest::Approx(2.0).epsilon(1e-14));
  const double e = std::sqrt(3.0) / 2.0;
  CHECK(szego_bound(4.0 * kPi, 8.0 * kPi) ==
        doctest::Approx(2.0 * std::sqrt(3.0) / std::log((2.0 + std::sqrt(3.0)) / (2.0 - std::sqrt(3.0))))
            .epsilon(1e-14));
  CHECK(szego_bound(4.0 * kPi, 8.0 * kPi) == doctest::Approx(2.0 * e / std::atanh(e)).epsilon(1e-14));
  CHECK_THROWS_WITH_AS(szego_bound(4.0 * kPi, 3.0 * kPi), doctest::Contains("not convex-consistent"),
                       InputError);
  // The series branch joins the closed form continuously.
  const double m = 4.0 * kPi;
  const double area_near = m * m * (1.0 - 1.0001e-8) / (4.0 * kPi);
  const double area_far = m * m * (1.0 - 0.9999e-8) / (4.0 * kPi);
  CHECK(szego_bound(area_near, m) == doctest::Approx(szego_bound(area_far, m)).epsilon(1e-12));
}

TEST_CASE("bray-miao bound examples") {
  CHECK(bray_miao_bound(4.0 * kPi, 16.0 * kPi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bray_miao_bound(64.0 * kPi, 8.0 * kPi) ==
        doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(bray_miao_bound(16.0 * kPi, 32.0 * kPi) ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  double prev = 0.0;
  for (double w = 0.0; w < 200.0; w += 7.3) {
    const double b = bray_miao_bound(10.0, w);
    CHECK(b > prev);
    prev = b;
  }
  CHECK_THROWS_AS(bray_miao_bound(0.0, 1.0), InputError);
}

TEST_CASE("imcf closed-form bound examples") {
  CHECK(imcf_closed_form_bound(16.0 * kPi, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(imcf_closed_form_bound(4.0 * kPi, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(imcf_closed_form_bound(64.0 * kPi, 1.0) ==
        doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(imcf_closed_form_bound(4.0 * kPi, 1.0), doctest::Contains("metric undefined"),
                       InputError);
}

TEST_CASE("imcf closed form equals the optimal profile bound over a grid") {
  for (double area : {4.0 * kPi, 16.0 * kPi, 64.0 * kPi, 3.0, 500.0}) {
    const double r0 = std::sqrt(area / (4.0 * kPi));
    for (double fraction : {-2.0, -0.5, 0.0, 0.1, 0.25, 0.4, 0.5}) {
      const double m = fraction * r0;
      const double closed = imcf_closed_form_bound(area, m);
      const double quad = optimal_profile_bound(ProfileFamily(ImcfProfile{area, m})).bound;
      CHECK(std::abs(closed - quad) < 1e-9 * std::max(1.0, closed));
    }
  }
}

TEST_CASE("steiner family reproduces the szego bound") {
  for (auto [area, h] : {std::pair{21.4784, 34.6875}, std::pair{4.0 * kPi, 8.0 * kPi},
                         std::pair{30.0, 45.0}}) {
    const double profile = optimal_profile_bound(ProfileFamily(SteinerProfile{area, h})).bound;
    CHECK(profile == doctest::Approx(szego_bound(area, 0.5 * h)).epsilon(1e-10));
  }
}

TEST_CASE("nonpositive T is rejected") {
  CHECK_THROWS_WITH_AS(ProfileFamily(SteinerProfile{1.0, -10.0}), doctest::Contains("nonpositive T"),
                       InputError);
  CHECK_THROWS_WITH_AS(ProfileFamily(ImcfProfile{4.0 * kPi, 0.6}), doctest::Contains("nonpositive T"),
                       InputError);
  CHECK_THROWS_AS(ProfileFamily(TabulatedProfile{{0.0, 1.0}, {1.0, 0.0}}), InputError);
  CHECK_THROWS_AS(ProfileFamily(TabulatedProfile{{0.5, 1.0}, {1.0, 2.0}}), InputError);
  CHECK_THROWS_AS(ProfileFamily(TabulatedProfile{{0.0, 0.0}, {1.0, 2.0}}), InputError);
}

TEST_CASE("profile duality: optimum attained and never beaten") {
  std::mt19937 rng(20240611);
  std::vector<ProfileFamily> families{
      ProfileFamily(SteinerProfile{4.0 * kPi, 8.0 * kPi}),
      ProfileFamily(SteinerProfile{21.4784, 34.6875}),
      ProfileFamily(ImcfProfile{4.0 * kPi, 0.0}),
      ProfileFamily(ImcfProfile{64.0 * kPi, 1.0}),
      ProfileFamily(ImcfProfile{16.0 * kPi, 1.0}),
      ProfileFamily(ImcfProfile{16.0 * kPi, -1.0}),
  };
  for (int k = 0; k < 4; ++k) families.emplace_back(random_table(rng));

  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const ProfileFamily& f : families) {
    const double bound = optimal_profile_bound(f).bound;
    const double energy = f.energy([&](double t) { return evaluate_optimal_f_prime(f, t); });
    CHECK(std::abs(energy - bound) < 1e-9 * bound);
    for (int trial = 0; trial < 10; ++trial) {
      const double eps = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.01 + 0.49 * u(rng));
      // decay <= 1.5 keeps the energy finite, and quickly convergent, against the e^t tail.
      const Bump g{eps, 1.0 + 2.0 * u(rng), 0.3 + 1.2 * u(rng)};
      // Rescale by 1 + Q[g'] (via polarization) so the profile is admissible under the energy's quadrature.
      const double plus = f.energy([&](double t) { return bound / f.T(t) + g.derivative(t); });
      const double minus = f.energy([&](double t) { return bound / f.T(t) - g.derivative(t); });
      const double qg = (plus - minus) / (4.0 * bound);
      CHECK(std::abs(qg) < 1e-2);  // trapezoid error of g' on the coarse table
      const double perturbed = plus / ((1.0 + qg) * (1.0 + qg));
      CHECK(perturbed >= bound * (1.0 - 1e-12));
    }
  }
}
