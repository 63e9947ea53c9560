#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "capbound/capbound.h"

TEST_CASE("version and error reporting") {
  CHECK(std::string(capbound_version()).find('.') != std::string::npos);
  capbound_mesh* mesh = nullptr;
  CHECK(capbound_mesh_load("/nonexistent/x.obj", &mesh) == CAPBOUND_INPUT_ERROR);
  CHECK(mesh == nullptr);
  CHECK(std::string(capbound_last_error()).find("x.obj") != std::string::npos);
  CHECK(capbound_mesh_load(nullptr, &mesh) == CAPBOUND_INPUT_ERROR);
  CHECK(capbound_mesh_vertex_count(nullptr) == 0);
  capbound_mesh_free(nullptr);
}

TEST_CASE("mesh handles: create, measure, solve, save") {
  // Regular tetrahedron.
  const std::vector<double> v{1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1};
  const std::vector<int> f{0, 1, 2, 0, 3, 1, 0, 2, 3, 1, 3, 2};
  capbound_mesh* tet = nullptr;
  REQUIRE(capbound_mesh_create(v.data(), 4, f.data(), 4, &tet) == CAPBOUND_OK);
  CHECK(capbound_mesh_face_count(tet) == 4);
  capbound_measures m{};
  REQUIRE(capbound_mesh_measure(tet, &m) == CAPBOUND_OK);
  CHECK(m.genus == 0);
  CHECK(m.euler_characteristic == 2);
  CHECK(m.area == doctest::Approx(4.0 * std::sqrt(3.0) / 4.0 * 8.0));
  capbound_mesh_free(tet);

  const std::vector<int> bad{0, 1, 2};
  capbound_mesh* open = nullptr;
  CHECK(capbound_mesh_create(v.data(), 4, bad.data(), 1, &open) == CAPBOUND_INPUT_ERROR);

  capbound_mesh* sphere = nullptr;
  REQUIRE(capbound_mesh_primitive("sphere:1:3", &sphere) == CAPBOUND_OK);
  CHECK(capbound_mesh_face_count(sphere) == 1280);
  capbound_capacity c{};
  REQUIRE(capbound_mesh_capacity(sphere, 1e-6, &c) == CAPBOUND_OK);
  CHECK(c.capacity == doctest::Approx(1.0).epsilon(0.01));
  CHECK(capbound_mesh_capacity(sphere, 1.0, &c) == CAPBOUND_INPUT_ERROR);
  const std::string path = "capi_sphere.ply";
  CHECK(capbound_mesh_save(sphere, path.c_str()) == CAPBOUND_OK);
  capbound_mesh* back = nullptr;
  REQUIRE(capbound_mesh_load(path.c_str(), &back) == CAPBOUND_OK);
  CHECK(capbound_mesh_vertex_count(back) == capbound_mesh_vertex_count(sphere));
  capbound_mesh_free(back);
  capbound_mesh_free(sphere);
  std::remove(path.c_str());
  CHECK(capbound_mesh_primitive("cube:1", &sphere) == CAPBOUND_INPUT_ERROR);
}

TEST_CASE("closed-form bounds") {
  const double pi = 3.14159265358979323846;
  double out = 0.0;
  REQUIRE(capbound_szego_bound(4 * pi, 4 * pi, &out) == CAPBOUND_OK);
  CHECK(out == doctest::Approx(1.0));
  REQUIRE(capbound_bray_miao_bound(64 * pi, 8 * pi, &out) == CAPBOUND_OK);
  CHECK(out == doctest::Approx(2.0 + std::sqrt(2.0)));
  REQUIRE(capbound_imcf_bound(16 * pi, 1.0, &out) == CAPBOUND_OK);
  CHECK(out == doctest::Approx(1.0));
  CHECK(capbound_szego_bound(4 * pi, 3 * pi, &out) == CAPBOUND_INPUT_ERROR);
  CHECK(capbound_bray_miao_bound(1.0, 1.0, nullptr) == CAPBOUND_INPUT_ERROR);
}

TEST_CASE("profile handles") {
  capbound_profile* p = nullptr;
  REQUIRE(capbound_profile_imcf(16 * 3.14159265358979323846, 0.0, &p) == CAPBOUND_OK);
  double b = 0.0, f = 0.0;
  REQUIRE(capbound_profile_bound(p, &b) == CAPBOUND_OK);
  CHECK(b == doctest::Approx(2.0).epsilon(1e-10));
  REQUIRE(capbound_profile_optimal_f(p, 2.0 * std::log(2.0), &f) == CAPBOUND_OK);
  CHECK(f == doctest::Approx(0.5).epsilon(1e-9));
  capbound_profile_free(p);

  const double t[] = {0.0, 1.0, 2.0};
  const double T[] = {1.0, std::exp(1.0), std::exp(2.0)};
  REQUIRE(capbound_profile_tabulated(t, T, 3, &p) == CAPBOUND_OK);
  REQUIRE(capbound_profile_bound(p, &b) == CAPBOUND_OK);
  CHECK(b > 0.9);
  CHECK(b < 1.0);
  capbound_profile_free(p);
  const double zero[] = {1.0, 0.0, 1.0};
  CHECK(capbound_profile_tabulated(t, zero, 3, &p) == CAPBOUND_INPUT_ERROR);
  CHECK(capbound_profile_steiner(1.0, -10.0, &p) == CAPBOUND_INPUT_ERROR);
}

TEST_CASE("metric handles") {
  capbound_metric* s = nullptr;
  REQUIRE(capbound_metric_schwarzschild(1.0, 4.0, &s) == CAPBOUND_OK);
  double c = 0.0, adm = 0.0;
  REQUIRE(capbound_metric_capacity(s, 0.0, &c) == CAPBOUND_OK);
  CHECK(c == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-10));
  REQUIRE(capbound_metric_adm_mass(s, &adm) == CAPBOUND_OK);
  CHECK(adm == doctest::Approx(1.0));
  capbound_sphere_geometry g{};
  REQUIRE(capbound_metric_geometry(s, 4.0, &g) == CAPBOUND_OK);
  CHECK(g.hawking_mass == doctest::Approx(1.0));
  CHECK(capbound_metric_geometry(s, 3.0, &g) == CAPBOUND_INPUT_ERROR);
  capbound_mass_bound mb{};
  REQUIRE(capbound_metric_mass_bound(s, &mb) == CAPBOUND_OK);
  CHECK(mb.equality == 1);
  CHECK(mb.scaled_capacity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(capbound_metric_capacity(s, 1.5, &c) == CAPBOUND_INPUT_ERROR);
  capbound_metric_free(s);

  CHECK(capbound_metric_schwarzschild(1.0, 1.0, &s) == CAPBOUND_INPUT_ERROR);
  const double r[] = {1.5, 2.0, 4.0};
  const double m[] = {0.5, 0.7, 1.0};
  REQUIRE(capbound_metric_tabulated(r, m, 3, NAN, &s) == CAPBOUND_OK);
  REQUIRE(capbound_metric_mass_bound(s, &mb) == CAPBOUND_OK);
  CHECK(mb.holds == 1);
  CHECK(mb.equality == 0);
  CHECK(mb.mass > mb.scaled_capacity);
  capbound_metric_free(s);

  capbound_static_result st{};
  REQUIRE(capbound_static_check(1.0, 4.0, &st) == CAPBOUND_OK);
  CHECK(st.min_lapse_squared == doctest::Approx(0.5));
  CHECK(st.equality == 1);
}

TEST_CASE("run entry point") {
  capbound_run_config config;
  capbound_run_config_init(&config);
  CHECK(capbound_run(&config) == CAPBOUND_INPUT_ERROR);
  config.command = "schwarzschild";
  config.mass = 1.0;
  config.r0 = 4.0;
  config.emit = "";
  CHECK(capbound_run(&config) == 0);
  config.command = "nope";
  CHECK(capbound_run(&config) == 1);
  config.command = "schwarzschild";
  config.r0 = 1.0;
  CHECK(capbound_run(&config) == 1);
}
