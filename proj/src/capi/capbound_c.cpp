#include "capbound/capbound.h"

#include <cmath>
#include <iostream>
#include <limits>
#include <memory>
#include <string>

#include "capbound/bem.hpp"
#include "capbound/error.hpp"
#include "capbound/level_set.hpp"
#include "capbound/mesh.hpp"
#include "capbound/report.hpp"
#include "capbound/symmetric.hpp"

struct capbound_mesh {
  capbound::TriMesh mesh;
};

struct capbound_profile {
  capbound::ProfileFamily family;
};

struct capbound_metric {
  capbound::SymmetricMetric metric;
};

namespace {

thread_local std::string g_last_error;

capbound_status fail(capbound_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
capbound_status guarded(F&& body) {
  try {
    body();
    return CAPBOUND_OK;
  } catch (const capbound::Error& e) {
    return fail(e.kind() == capbound::ErrorKind::Input ? CAPBOUND_INPUT_ERROR
                                                       : CAPBOUND_NUMERICAL_ERROR,
                e.what());
  } catch (const std::bad_alloc&) {
    return fail(CAPBOUND_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CAPBOUND_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(CAPBOUND_INTERNAL_ERROR, "unknown exception");
  }
}

#define CAPBOUND_REQUIRE(cond)                                          \
  do {                                                                  \
    if (!(cond)) return fail(CAPBOUND_INPUT_ERROR, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* capbound_version(void) { return CAPBOUND_VERSION; }

const char* capbound_last_error(void) { return g_last_error.c_str(); }

capbound_status capbound_mesh_load(const char* path, capbound_mesh** out) {
  CAPBOUND_REQUIRE(path && out);
  return guarded([&] { *out = new capbound_mesh{capbound::load_mesh(path)}; });
}

capbound_status capbound_mesh_create(const double* vertices, size_t vertex_count,
                                     const int* faces, size_t face_count, capbound_mesh** out) {
  CAPBOUND_REQUIRE(vertices && faces && out);
  return guarded([&] {
    std::vector<capbound::Vec3> v(vertex_count);
    for (size_t i = 0; i < vertex_count; ++i) {
      v[i] = {vertices[3 * i], vertices[3 * i + 1], vertices[3 * i + 2]};
    }
    std::vector<capbound::Face> f(face_count);
    for (size_t i = 0; i < face_count; ++i) f[i] = {faces[3 * i], faces[3 * i + 1], faces[3 * i + 2]};
    *out = new capbound_mesh{capbound::TriMesh(std::move(v), std::move(f))};
  });
}

capbound_status capbound_mesh_primitive(const char* spec, capbound_mesh** out) {
  CAPBOUND_REQUIRE(spec && out);
  return guarded([&] {
    *out = new capbound_mesh{capbound::make_primitive(capbound::parse_primitive(spec))};
  });
}

capbound_status capbound_mesh_save(const capbound_mesh* mesh, const char* path) {
  CAPBOUND_REQUIRE(mesh && path);
  return guarded([&] { capbound::save_mesh(mesh->mesh, path); });
}

void capbound_mesh_free(capbound_mesh* mesh) { delete mesh; }

size_t capbound_mesh_vertex_count(const capbound_mesh* mesh) {
  return mesh ? mesh->mesh.vertex_count() : 0;
}

size_t capbound_mesh_face_count(const capbound_mesh* mesh) {
  return mesh ? mesh->mesh.face_count() : 0;
}

capbound_status capbound_mesh_measure(const capbound_mesh* mesh, capbound_measures* out) {
  CAPBOUND_REQUIRE(mesh && out);
  return guarded([&] {
    const capbound::SurfaceMeasures m = capbound::measure(mesh->mesh);
    *out = {m.area,  m.total_mean_curvature,   m.willmore,
            m.volume, m.hawking_mass,          m.genus,
            m.euler_characteristic, m.has_negative_mean_curvature ? 1 : 0};
  });
}

capbound_status capbound_mesh_capacity(const capbound_mesh* mesh, double tolerance,
                                       capbound_capacity* out) {
  CAPBOUND_REQUIRE(mesh && out);
  return guarded([&] {
    const capbound::CapacitySolution s = capbound::solve_capacity(mesh->mesh, tolerance);
    *out = {s.capacity, s.residual, s.mesh_size, s.condition_estimate};
  });
}

capbound_status capbound_szego_bound(double area, double half_mean_curvature, double* out) {
  CAPBOUND_REQUIRE(out);
  return guarded([&] { *out = capbound::szego_bound(area, half_mean_curvature); });
}

capbound_status capbound_bray_miao_bound(double area, double willmore, double* out) {
  CAPBOUND_REQUIRE(out);
  return guarded([&] { *out = capbound::bray_miao_bound(area, willmore); });
}

capbound_status capbound_imcf_bound(double area, double hawking_mass, double* out) {
  CAPBOUND_REQUIRE(out);
  return guarded([&] { *out = capbound::imcf_closed_form_bound(area, hawking_mass); });
}

capbound_status capbound_profile_steiner(double area, double total_mean_curvature,
                                         capbound_profile** out) {
  CAPBOUND_REQUIRE(out);
  return guarded([&] {
    *out = new capbound_profile{
        capbound::ProfileFamily(capbound::SteinerProfile{area, total_mean_curvature})};
  });
}

capbound_status capbound_profile_imcf(double area, double hawking_mass, capbound_profile** out) {
  CAPBOUND_REQUIRE(out);
  return guarded([&] {
    *out = new capbound_profile{capbound::ProfileFamily(capbound::ImcfProfile{area, hawking_mass})};
  });
}

capbound_status capbound_profile_tabulated(const double* t, const double* value, size_t count,
                                           capbound_profile** out) {
  CAPBOUND_REQUIRE(t && value && out);
  return guarded([&] {
    capbound::TabulatedProfile p{{t, t + count}, {value, value + count}};
    *out = new capbound_profile{capbound::ProfileFamily(std::move(p))};
  });
}

void capbound_profile_free(capbound_profile* profile) { delete profile; }

capbound_status capbound_profile_bound(const capbound_profile* profile, double* out) {
  CAPBOUND_REQUIRE(profile && out);
  return guarded([&] { *out = capbound::optimal_profile_bound(profile->family).bound; });
}

capbound_status capbound_profile_optimal_f(const capbound_profile* profile, double t,
                                           double* out) {
  CAPBOUND_REQUIRE(profile && out);
  return guarded([&] { *out = capbound::evaluate_optimal_f(profile->family, t); });
}

capbound_status capbound_metric_schwarzschild(double mass, double r0, capbound_metric** out) {
  CAPBOUND_REQUIRE(out);
  return guarded(
      [&] { *out = new capbound_metric{capbound::SymmetricMetric::schwarzschild(mass, r0)}; });
}

capbound_status capbound_metric_tabulated(const double* r, const double* m, size_t count,
                                          double r0, capbound_metric** out) {
  CAPBOUND_REQUIRE(r && m && out);
  return guarded([&] {
    *out = new capbound_metric{
        capbound::SymmetricMetric::tabulated({r, r + count}, {m, m + count}, r0)};
  });
}

capbound_status capbound_metric_load_csv(const char* path, double r0, capbound_metric** out) {
  CAPBOUND_REQUIRE(path && out);
  return guarded([&] { *out = new capbound_metric{capbound::load_mass_function_csv(path, r0)}; });
}

void capbound_metric_free(capbound_metric* metric) { delete metric; }

capbound_status capbound_metric_geometry(const capbound_metric* metric, double r,
                                         capbound_sphere_geometry* out) {
  CAPBOUND_REQUIRE(metric && out);
  return guarded([&] {
    const capbound::SphereGeometry g = capbound::geometry_at(metric->metric, r);
    *out = {g.radius, g.area, g.mean_curvature, g.willmore, g.hawking_mass, g.scalar_curvature};
  });
}

capbound_status capbound_metric_capacity(const capbound_metric* metric, double alpha,
                                         double* out) {
  CAPBOUND_REQUIRE(metric && out);
  return guarded([&] { *out = capbound::radial_capacity(metric->metric, alpha).capacity(); });
}

capbound_status capbound_metric_adm_mass(const capbound_metric* metric, double* out) {
  CAPBOUND_REQUIRE(metric && out);
  return guarded([&] { *out = capbound::adm_mass(metric->metric); });
}

capbound_status capbound_metric_mass_bound(const capbound_metric* metric,
                                           capbound_mass_bound* out) {
  CAPBOUND_REQUIRE(metric && out);
  return guarded([&] {
    const capbound::MassBoundCheck c = capbound::mass_bound_check(metric->metric);
    *out = {c.hypothesis_ok ? 1 : 0, c.mass,     c.boundary_hawking_mass, c.alpha,
            c.capacity,              c.scaled_capacity, c.holds ? 1 : 0,  c.equality ? 1 : 0};
  });
}

capbound_status capbound_static_check(double mass, double r0, capbound_static_result* out) {
  CAPBOUND_REQUIRE(out);
  return guarded([&] {
    const capbound::StaticCheck c = capbound::static_check(mass, r0);
    *out = {c.min_lapse_squared, c.willmore_term, c.equality ? 1 : 0};
  });
}

void capbound_run_config_init(capbound_run_config* config) {
  if (!config) return;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  *config = {};
  config->tolerance = nan;
  config->mass = nan;
  config->r0 = nan;
  config->alpha = 0.0;
  config->t_max = 8.0;
  config->steps = 65;
}

int capbound_run(const capbound_run_config* config) {
  if (!config || !config->command) {
    g_last_error = "null run config or command";
    return CAPBOUND_INPUT_ERROR;
  }
  capbound::RunConfig rc;
  try {
    rc.command = capbound::parse_command(config->command);
    for (size_t i = 0; i < config->input_count; ++i) rc.inputs.emplace_back(config->inputs[i]);
    if (config->out_dir) rc.out_dir = config->out_dir;
    if (config->emit) rc.emit = capbound::parse_emit(config->emit);
  } catch (const capbound::Error& e) {
    g_last_error = e.what();
    std::cerr << "error: " << e.what() << "\n";
    return CAPBOUND_INPUT_ERROR;
  }
  rc.bem = config->bem != 0;
  if (!std::isnan(config->tolerance)) rc.tolerance = config->tolerance;
  if (!std::isnan(config->mass)) rc.mass = config->mass;
  if (!std::isnan(config->r0)) rc.r0 = config->r0;
  if (config->mass_fn) rc.mass_fn = config->mass_fn;
  rc.alpha = config->alpha;
  rc.t_max = config->t_max;
  rc.steps = config->steps;
  if (config->primitive) rc.primitive = config->primitive;
  const int code = capbound::run(rc, std::cout);
  std::cout.flush();
  return code;
}

}  // extern "C"
