#ifndef CAPBOUND_CAPBOUND_H
#define CAPBOUND_CAPBOUND_H

/* C interface to the capbound library. Every fallible call returns a
 * capbound_status; on failure capbound_last_error() describes the cause
 * (thread-local, valid until the next failing call on the same thread).
 * Geometric units (G = c = 1) throughout. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CAPBOUND_BUILDING_LIBRARY)
#    define CAPBOUND_API __declspec(dllexport)
#  else
#    define CAPBOUND_API __declspec(dllimport)
#  endif
#else
#  define CAPBOUND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum capbound_status {
  CAPBOUND_OK = 0,
  CAPBOUND_INPUT_ERROR = 1,
  CAPBOUND_NUMERICAL_ERROR = 2,
  CAPBOUND_INTERNAL_ERROR = 3
} capbound_status;

CAPBOUND_API const char* capbound_version(void);
CAPBOUND_API const char* capbound_last_error(void);

/* ---- meshes ---- */

typedef struct capbound_mesh capbound_mesh;

CAPBOUND_API capbound_status capbound_mesh_load(const char* path, capbound_mesh** out);
/* vertices: 3 * vertex_count doubles; faces: 3 * face_count zero-based indices. */
CAPBOUND_API capbound_status capbound_mesh_create(const double* vertices, size_t vertex_count,
                                                  const int* faces, size_t face_count,
                                                  capbound_mesh** out);
/* spec: "sphere:r:n", "spheroid:a:b:n", "box:lx:ly:lz:rounding:n" or "torus:R:r:n". */
CAPBOUND_API capbound_status capbound_mesh_primitive(const char* spec, capbound_mesh** out);
CAPBOUND_API capbound_status capbound_mesh_save(const capbound_mesh* mesh, const char* path);
CAPBOUND_API void capbound_mesh_free(capbound_mesh* mesh);
CAPBOUND_API size_t capbound_mesh_vertex_count(const capbound_mesh* mesh);
CAPBOUND_API size_t capbound_mesh_face_count(const capbound_mesh* mesh);

typedef struct capbound_measures {
  double area;
  double total_mean_curvature;
  double willmore;
  double volume;
  double hawking_mass;
  int genus;
  int euler_characteristic;
  int has_negative_mean_curvature;
} capbound_measures;

CAPBOUND_API capbound_status capbound_mesh_measure(const capbound_mesh* mesh,
                                                   capbound_measures* out);

typedef struct capbound_capacity {
  double capacity;
  double residual;
  double mesh_size;
  double condition_estimate;
} capbound_capacity;

/* tolerance in (0, 1e-2]. */
CAPBOUND_API capbound_status capbound_mesh_capacity(const capbound_mesh* mesh, double tolerance,
                                                    capbound_capacity* out);

/* ---- closed-form bounds ---- */

CAPBOUND_API capbound_status capbound_szego_bound(double area, double half_mean_curvature,
                                                  double* out);
CAPBOUND_API capbound_status capbound_bray_miao_bound(double area, double willmore, double* out);
CAPBOUND_API capbound_status capbound_imcf_bound(double area, double hawking_mass, double* out);

/* ---- level-set profile families ---- */

typedef struct capbound_profile capbound_profile;

CAPBOUND_API capbound_status capbound_profile_steiner(double area, double total_mean_curvature,
                                                      capbound_profile** out);
CAPBOUND_API capbound_status capbound_profile_imcf(double area, double hawking_mass,
                                                   capbound_profile** out);
CAPBOUND_API capbound_status capbound_profile_tabulated(const double* t, const double* value,
                                                        size_t count, capbound_profile** out);
CAPBOUND_API void capbound_profile_free(capbound_profile* profile);
/* (integral of 1/T over [0, inf))^-1. */
CAPBOUND_API capbound_status capbound_profile_bound(const capbound_profile* profile, double* out);
CAPBOUND_API capbound_status capbound_profile_optimal_f(const capbound_profile* profile, double t,
                                                        double* out);

/* ---- rotationally symmetric metrics ---- */

typedef struct capbound_metric capbound_metric;

CAPBOUND_API capbound_status capbound_metric_schwarzschild(double mass, double r0,
                                                           capbound_metric** out);
/* r0 may be NaN to start at the first sample. */
CAPBOUND_API capbound_status capbound_metric_tabulated(const double* r, const double* m,
                                                       size_t count, double r0,
                                                       capbound_metric** out);
CAPBOUND_API capbound_status capbound_metric_load_csv(const char* path, double r0,
                                                      capbound_metric** out);
CAPBOUND_API void capbound_metric_free(capbound_metric* metric);

typedef struct capbound_sphere_geometry {
  double radius;
  double area;
  double mean_curvature;
  double willmore;
  double hawking_mass;
  double scalar_curvature;
} capbound_sphere_geometry;

CAPBOUND_API capbound_status capbound_metric_geometry(const capbound_metric* metric, double r,
                                                      capbound_sphere_geometry* out);
/* alpha in [0, 1); alpha = 0 gives the capacity of the boundary sphere. */
CAPBOUND_API capbound_status capbound_metric_capacity(const capbound_metric* metric, double alpha,
                                                      double* out);
CAPBOUND_API capbound_status capbound_metric_adm_mass(const capbound_metric* metric, double* out);

typedef struct capbound_mass_bound {
  int hypothesis_ok;
  double mass;
  double boundary_hawking_mass;
  double alpha;
  double capacity;
  double scaled_capacity;
  int holds;
  int equality;
} capbound_mass_bound;

CAPBOUND_API capbound_status capbound_metric_mass_bound(const capbound_metric* metric,
                                                        capbound_mass_bound* out);

typedef struct capbound_static_result {
  double min_lapse_squared;
  double willmore_term;
  int equality;
} capbound_static_result;

CAPBOUND_API capbound_status capbound_static_check(double mass, double r0,
                                                   capbound_static_result* out);

/* ---- command runner ---- */

typedef struct capbound_run_config {
  const char* command; /* measure, capacity, bounds, schwarzschild, symmetric, corpus, generate */
  const char* const* inputs;
  size_t input_count;
  const char* out_dir; /* NULL: current directory */
  const char* emit;    /* comma list of json, csv, svg; "" emits nothing; NULL: all */
  int bem;
  double tolerance; /* NaN: per-command default */
  double mass;      /* NaN: unset */
  double r0;        /* NaN: unset */
  const char* mass_fn;
  double alpha;
  double t_max;
  int steps;
  const char* primitive;
} capbound_run_config;

CAPBOUND_API void capbound_run_config_init(capbound_run_config* config);
/* Returns the process exit code (0 ok, 1 input error, 2 numerical failure) and
 * prints the JSON report or error object to stdout. */
CAPBOUND_API int capbound_run(const capbound_run_config* config);

#ifdef __cplusplus
}
#endif

#endif
