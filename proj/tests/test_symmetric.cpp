#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "capbound/error.hpp"
#include "capbound/level_set.hpp"
#include "capbound/mesh.hpp"
#include "capbound/symmetric.hpp"

using namespace capbound;

namespace {

constexpr double kPi = std::numbers::pi;

// Increasing mass, boundary with m(r0) = 0.5 well outside its horizon.
SymmetricMetric rising_fixture() {
  return SymmetricMetric::tabulated({1.5, 2.0, 3.0, 4.0, 6.0}, {0.5, 0.6, 0.8, 0.95, 1.0});
}

// Mass decreases on [2, 3] only.
SymmetricMetric dip_fixture() {
  return SymmetricMetric::tabulated({1.0, 2.0, 3.0, 4.0}, {0.25, 0.6, 0.4, 0.5});
}

// Scalar curvature of g = A(r) dr^2 + r^2 (dth^2 + sin^2 th dph^2) from
// finite-difference Christoffel symbols, without using the closed form.
double scalar_curvature_fd(const SymmetricMetric& metric, double r) {
  using Vec = std::array<double, 3>;
  using Mat = std::array<std::array<double, 3>, 3>;
  const double h = 1e-4 * r;
  auto g = [&](const Vec& x) {
    Mat m{};
    m[0][0] = metric.metric_factor(x[0]);
    m[1][1] = x[0] * x[0];
    m[2][2] = x[0] * x[0] * std::sin(x[1]) * std::sin(x[1]);
    return m;
  };
  auto christoffel = [&](const Vec& x) {
    std::array<Mat, 3> dg{};
    for (int k = 0; k < 3; ++k) {
      Vec xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const Mat gp = g(xp), gm = g(xm);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dg[k][i][j] = (gp[i][j] - gm[i][j]) / (2 * h);
    }
    const Mat gx = g(x);
    std::array<Mat, 3> gamma{};  // gamma[k][i][j] = Gamma^k_ij
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          gamma[k][i][j] = 0.5 / gx[k][k] * (dg[i][k][j] + dg[j][k][i] - dg[k][i][j]);
    return gamma;
  };
  const Vec x{r, 1.1, 0.3};
  const auto gam = christoffel(x);
  std::array<std::array<Mat, 3>, 3> dgam{};  // dgam[l][k][i][j] = d_l Gamma^k_ij
  for (int l = 0; l < 3; ++l) {
    Vec xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    const auto gp = christoffel(xp), gm = christoffel(xm);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dgam[l][k][i][j] = (gp[k][i][j] - gm[k][i][j]) / (2 * h);
  }
  const Mat gx = g(x);
  double scalar = 0.0;
  for (int i = 0; i < 3; ++i) {
    double ricci = 0.0;  // R_ii
    for (int k = 0; k < 3; ++k) {
      ricci += dgam[k][k][i][i] - dgam[i][k][i][k];
      for (int l = 0; l < 3; ++l) {
        ricci += gam[k][k][l] * gam[l][i][i] - gam[k][i][l] * gam[l][i][k];
      }
    }
    scalar += ricci / gx[i][i];
  }
  return scalar;
}

}  // namespace

TEST_CASE("coordinate sphere geometry examples") {
  const SphereGeometry horizon = geometry_at(SymmetricMetric::schwarzschild(1.0, 2.0), 2.0);
  CHECK(horizon.mean_curvature == 0.0);
  CHECK(horizon.hawking_mass == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(horizon.scalar_curvature == 0.0);

  const SphereGeometry s4 = geometry_at(SymmetricMetric::schwarzschild(1.0, 2.0), 4.0);
  CHECK(s4.mean_curvature == doctest::Approx(0.5 * std::sqrt(0.5)).epsilon(1e-14));
  CHECK(s4.willmore == doctest::Approx(8.0 * kPi).epsilon(1e-14));
  CHECK(s4.hawking_mass == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s4.area == doctest::Approx(64.0 * kPi).epsilon(1e-15));

  const SymmetricMetric flat = SymmetricMetric::flat(1.0);
  for (double r : {1.0, 2.5, 40.0}) {
    const SphereGeometry f = geometry_at(flat, r);
    CHECK(std::abs(f.hawking_mass) < 1e-14 * r);
    CHECK(f.scalar_curvature == 0.0);
    CHECK(f.mean_curvature == doctest::Approx(2.0 / r).epsilon(1e-15));
  }
  CHECK_THROWS_AS(geometry_at(flat, 0.5), InputError);
}

TEST_CASE("metric validation") {
  CHECK_THROWS_WITH_AS(SymmetricMetric::schwarzschild(1.0, 1.5), doctest::Contains("metric undefined"),
                       InputError);
  CHECK_THROWS_AS(SymmetricMetric::flat(0.0), InputError);
  CHECK_THROWS_WITH_AS(SymmetricMetric::tabulated({1.0, 2.0}, {0.1, 0.2}, 3.0),
                       doctest::Contains("outside the tabulated radii"), InputError);
  // Mass overtakes r / 2 beyond the boundary.
  CHECK_THROWS_WITH_AS(SymmetricMetric::tabulated({3.0, 4.0, 5.0}, {0.5, 2.2, 2.2}),
                       doctest::Contains("metric undefined"), InputError);
  CHECK_THROWS_AS(SymmetricMetric::tabulated({1.0, 1.0}, {0.1, 0.2}), InputError);
  CHECK(SymmetricMetric::schwarzschild(1.0, 2.0).is_horizon());
  CHECK(rising_fixture().knots_beyond_r0().size() == 4);
  CHECK_FALSE(rising_fixture().is_schwarzschild());
  CHECK(SymmetricMetric::tabulated({1.0, 2.0}, {0.3, 0.3}).is_schwarzschild());
}

TEST_CASE("Hawking mass of coordinate spheres equals m(r)") {
  for (const SymmetricMetric& metric :
       {SymmetricMetric::schwarzschild(1.0, 2.0), SymmetricMetric::schwarzschild(-1.0, 0.5),
        rising_fixture(), dip_fixture()}) {
    for (double r = metric.r0(); r < 50.0; r *= 1.137) {
      const SphereGeometry g = geometry_at(metric, r);
      CHECK(std::abs(g.hawking_mass - metric.mass(r)) < 1e-12 * std::max(1.0, r));
      CHECK(g.hawking_mass == hawking_mass(g.area, g.willmore));
    }
  }
}

TEST_CASE("scalar curvature 4 m' / r^2 matches finite-difference curvature") {
  const SymmetricMetric metric = dip_fixture();
  for (double r : {1.5, 2.5, 3.5, 5.0}) {
    const double fd = scalar_curvature_fd(metric, r);
    CHECK(std::abs(geometry_at(metric, r).scalar_curvature - fd) < 1e-5);
  }
  for (double r : {2.5, 4.0, 9.0}) {
    CHECK(std::abs(scalar_curvature_fd(SymmetricMetric::schwarzschild(1.0, 2.0), r)) < 1e-6);
  }
}

TEST_CASE("radial capacity examples") {
  CHECK(radial_capacity(SymmetricMetric::schwarzschild(1.0, 2.0)).capacity() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(radial_capacity(SymmetricMetric::flat(3.0)).capacity() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(radial_capacity(SymmetricMetric::schwarzschild(1.0, 4.0)).capacity() ==
        doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-8));
  CHECK(radial_capacity(SymmetricMetric::schwarzschild(-1.0, 2.0)).capacity() ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-8));
  CHECK_THROWS_AS(radial_capacity(SymmetricMetric::flat(1.0), 1.0), InputError);
  CHECK_THROWS_AS(radial_capacity(SymmetricMetric::flat(1.0), -0.1), InputError);
}

TEST_CASE("quadrature capacity agrees with the closed form over a grid") {
  for (double m : {-2.0, -1.0, -0.1, 0.0, 0.3, 0.5, 1.0}) {
    for (double r0 : {0.5, 1.0, 2.0, 3.0, 4.0, 10.0}) {
      if (r0 < 2.0 * m) continue;
      const double quad = radial_capacity(SymmetricMetric::schwarzschild(m, r0)).capacity();
      const double closed = schwarzschild_closed_forms(m, r0).capacity;
      CHECK(std::abs(quad - closed) < 1e-8 * closed);
    }
  }
}

TEST_CASE("alpha potential scales the capacity and interpolates the boundary value") {
  const SymmetricMetric metric = rising_fixture();
  const double c = radial_capacity(metric).capacity();
  for (double alpha : {0.0, 0.3, 0.9}) {
    const RadialPotential u = radial_capacity(metric, alpha);
    CHECK(u.capacity() == doctest::Approx((1.0 - alpha) * c).epsilon(1e-13));
    CHECK(u(metric.r0()) == doctest::Approx(alpha).epsilon(1e-15));
    CHECK(u(1e8) == doctest::Approx(1.0 - u.capacity() / 1e8).epsilon(1e-12));
    double prev = u(metric.r0());
    for (double r = metric.r0() * 1.1; r < 100.0; r *= 1.3) {
      CHECK(u(r) > prev);
      prev = u(r);
    }
  }
}

TEST_CASE("closed forms: examples and u = f0 o phi") {
  const SchwarzschildClosedForms h = schwarzschild_closed_forms(1.0, 2.0);
  CHECK(h.v0 == 0.0);
  CHECK(h.capacity == 1.0);
  CHECK(h.u(4.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  const SchwarzschildClosedForms flat = schwarzschild_closed_forms(0.0, 1.0);
  CHECK(flat.capacity == 1.0);
  for (double t : {0.0, 0.3, 2.0, 11.0}) {
    CHECK(flat.f0(t) == doctest::Approx(1.0 - std::exp(-t / 2.0)).epsilon(1e-15));
  }
  const SchwarzschildClosedForms neg = schwarzschild_closed_forms(-1.0, 2.0);
  CHECK(neg.v0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(neg.capacity == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(schwarzschild_closed_forms(1.0, 1.9), InputError);

  for (double m : {-1.0, 0.0, 0.5, 1.0}) {
    for (double r0 : {2.0, 3.0, 4.0, 10.0}) {
      if (r0 < 2.0 * m) continue;
      const SchwarzschildClosedForms cf = schwarzschild_closed_forms(m, r0);
      const RadialPotential u = radial_capacity(SymmetricMetric::schwarzschild(m, r0));
      for (double r = r0; r < 1e4; r *= 1.7) {
        CHECK(std::abs(cf.u(r) - cf.f0(cf.phi(r))) < 1e-12);
        CHECK(std::abs(cf.u(r) - u(r)) < 1e-9);
      }
    }
  }
}

TEST_CASE("ADM mass") {
  CHECK(adm_mass(SymmetricMetric::schwarzschild(1.0, 2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(adm_mass(SymmetricMetric::flat(1.0)) == 0.0);
  const SymmetricMetric rising = SymmetricMetric::tabulated({1.0, 2.0, 3.0, 5.0}, {0.5, 0.8, 0.95, 1.0});
  CHECK(adm_mass(rising) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("imcf trace on presets") {
  const RadialScan s = imcf_trace(SymmetricMetric::schwarzschild(1.0, 2.0), 8.0, 33);
  REQUIRE(s.samples.size() == 33);
  for (const RadialSample& x : s.samples) {
    CHECK(x.geometry.hawking_mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x.geometry.area == doctest::Approx(16.0 * kPi * std::exp(x.t)).epsilon(1e-13));
  }
  CHECK(s.hawking_monotone);
  CHECK(s.scalar_nonnegative);

  const RadialScan f = imcf_trace(SymmetricMetric::flat(1.0), 4.0, 5);
  for (const RadialSample& x : f.samples) CHECK(std::abs(x.geometry.hawking_mass) < 1e-13);
  CHECK_THROWS_AS(imcf_trace(SymmetricMetric::flat(1.0), 0.0, 5), InputError);
  CHECK_THROWS_AS(imcf_trace(SymmetricMetric::flat(1.0), 1.0, 1), InputError);
}

TEST_CASE("sign linkage between Hawking monotonicity and scalar curvature") {
  const RadialScan up = imcf_trace(rising_fixture(), 6.0, 40);
  CHECK(up.hawking_monotone);
  CHECK(up.scalar_nonnegative);

  const RadialScan dip = imcf_trace(dip_fixture(), 6.0, 40);
  CHECK_FALSE(dip.hawking_monotone);
  CHECK_FALSE(dip.scalar_nonnegative);
  REQUIRE_FALSE(dip.hawking_decreasing.empty());
  // Every decreasing interval contains a negative-curvature sample and vice versa.
  for (const auto& [lo, hi] : dip.hawking_decreasing) {
    CHECK(lo >= 2.0 - 1e-12);
    CHECK(hi <= 3.0 + 1e-12);
    bool found = false;
    for (double r : dip.negative_scalar_radii) found = found || (r >= lo && r <= hi);
    CHECK(found);
  }
  for (double r : dip.negative_scalar_radii) {
    CHECK(r > 2.0);
    CHECK(r < 3.0);
  }
}

TEST_CASE("mass bound check") {
  const MassBoundCheck horizon = mass_bound_check(SymmetricMetric::schwarzschild(1.0, 2.0));
  CHECK(horizon.alpha == 0.0);
  CHECK(horizon.scaled_capacity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(horizon.equality);
  CHECK(horizon.holds);

  const MassBoundCheck s4 = mass_bound_check(SymmetricMetric::schwarzschild(1.0, 4.0));
  CHECK(s4.alpha == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(s4.capacity == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-10));
  CHECK(std::abs(s4.scaled_capacity - 1.0) < 1e-9);
  CHECK(s4.equality);

  const MassBoundCheck strict = mass_bound_check(rising_fixture());
  CHECK(strict.hypothesis_ok);
  CHECK(strict.holds);
  CHECK_FALSE(strict.equality);
  CHECK(strict.mass > strict.scaled_capacity + 1e-6);

  // Negative boundary Hawking mass: reported, not judged.
  const MassBoundCheck neg = mass_bound_check(SymmetricMetric::schwarzschild(-1.0, 2.0));
  CHECK_FALSE(neg.hypothesis_ok);
}

TEST_CASE("capacity stays below the sphere bound, with equality on Schwarzschild") {
  auto sphere_bound = [](const SymmetricMetric& metric) {
    const SphereGeometry g = geometry_at(metric, metric.r0());
    return bray_miao_bound(g.area, g.willmore);
  };
  for (double m : {-1.0, 0.0, 0.5, 1.0}) {
    for (double r0 : {2.0, 3.0, 10.0}) {
      const SymmetricMetric metric = SymmetricMetric::schwarzschild(m, r0);
      CHECK(radial_capacity(metric).capacity() == doctest::Approx(sphere_bound(metric)).epsilon(1e-9));
    }
  }
  for (const SymmetricMetric& metric :
       {rising_fixture(), SymmetricMetric::tabulated({1.0, 2.0, 3.0, 4.0}, {0.25, 0.5, 0.9, 1.0}),
        SymmetricMetric::tabulated({2.0, 5.0, 9.0}, {0.0, 0.2, 0.6})}) {
    CHECK(radial_capacity(metric).capacity() < sphere_bound(metric));
  }
}

TEST_CASE("ADM mass dominates the Hawking mass along the flow") {
  for (const SymmetricMetric& metric : {rising_fixture(), SymmetricMetric::schwarzschild(1.0, 3.0)}) {
    const RadialScan s = imcf_trace(metric, 20.0, 11);
    CHECK(adm_mass(metric) >= s.samples.back().geometry.hawking_mass - 1e-9);
    CHECK(std::abs(adm_mass(metric) - s.samples.back().geometry.hawking_mass) < 1e-9);
  }
}

TEST_CASE("static check") {
  const StaticCheck a = static_check(1.0, 4.0);
  CHECK(a.min_lapse_squared == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a.willmore_term == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a.equality);
  const StaticCheck b = static_check(0.0, 7.0);
  CHECK(b.min_lapse_squared == 1.0);
  CHECK(b.willmore_term == doctest::Approx(1.0).epsilon(1e-15));
  const StaticCheck c = static_check(1.0, 2.0);
  CHECK(c.min_lapse_squared == 0.0);
  CHECK(std::abs(c.willmore_term) < 1e-12);
  CHECK(c.equality);
  CHECK_THROWS_AS(static_check(1.0, 1.0), InputError);
  CHECK_THROWS_AS(static_check(-1.0, 3.0), InputError);
}

TEST_CASE("mass function CSV") {
  const SymmetricMetric m = parse_mass_function_csv("# comment\nr,m\n1,0.25\n2,0.5\n\n3,0.9\n");
  CHECK(m.r0() == 1.0);
  CHECK(m.mass(2.0) == doctest::Approx(0.5));
  CHECK(m.mass(100.0) == doctest::Approx(0.9));
  CHECK(parse_mass_function_csv("r,m\n1,0.25\n2,0.5\n", 1.5).r0() == 1.5);
  CHECK_THROWS_WITH_AS(parse_mass_function_csv("x,y\n1,2\n"), doctest::Contains("header"), InputError);
  CHECK_THROWS_WITH_AS(parse_mass_function_csv("r,m\n1,abc\n2,3\n"), doctest::Contains("line 2"),
                       InputError);
  CHECK_THROWS_AS(parse_mass_function_csv("r,m\n2,0.1\n1,0.2\n"), InputError);
  CHECK_THROWS_AS(parse_mass_function_csv("r,m\n1,0.1\n"), InputError);
  CHECK_THROWS_WITH_AS(load_mass_function_csv("/nonexistent/mass.csv"), doctest::Contains("mass.csv"),
                       InputError);
}
