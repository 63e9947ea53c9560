#pragma once

#include <span>
#include <vector>

#include "capbound/mesh.hpp"

namespace capbound {

/// Largest accepted 1-norm condition estimate of the collocation matrix.
inline constexpr double kMaxConditionNumber = 1e12;

/// Equilibrium charge on a closed conductor held at unit potential in flat R^3.
///
/// Normalised so that the capacity of a round sphere equals its radius: the
/// potential of a surface charge sigma is sum_j sigma_j * integral 1/|x - y|.
struct CapacitySolution {
  std::vector<double> density;  ///< piecewise-constant sigma per face
  double capacity = 0.0;        ///< sum_j sigma_j * area_j
  double residual = 0.0;        ///< max_i |(K sigma)_i - 1|
  double mesh_size = 0.0;       ///< longest edge
  double condition_estimate = 0.0;
};

/// Collocation at face centroids with a dense LU solve.
///
/// Throws NumericalError if the system is ill conditioned, the residual
/// exceeds `tolerance`, or any face density is nonpositive (which signals a
/// bad or inside-out mesh). `tolerance` must lie in (0, 1e-2].
CapacitySolution solve_capacity(const TriMesh& mesh, double tolerance = 1e-6);

/// Integral of 1/|x - y| over the triangle (a, b, c) for x in the triangle's
/// plane, evaluated in closed form edge by edge.
double triangle_self_potential(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x);

/// Integral of 1/|x - y| over the triangle (a, b, c) for x off the triangle:
/// a single centroid point once |x - centroid| >= near_ratio * (longest edge),
/// otherwise recursive 1-to-4 subdivision until every piece meets that test.
double triangle_potential(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x,
                          double near_ratio = 2.0);

/// C(h) = extrapolated + coefficient * h^order fitted through the three finest levels.
struct RichardsonFit {
  double extrapolated = 0.0;
  double order = 0.0;
  double coefficient = 0.0;
  std::vector<double> mesh_sizes;
  std::vector<double> capacities;
};

/// Fits a power-law error model to (h, C) pairs ordered by strictly decreasing h.
/// Throws InputError for non-decreasing h, NumericalError (carrying the raw
/// values in the message) when C(h) is not monotone or the fitted order is <= 0.5.
RichardsonFit richardson_fit(std::span<const double> mesh_sizes,
                             std::span<const double> capacities);

/// Solves every mesh and extrapolates to h -> 0.
RichardsonFit refine_capacity(std::span<const TriMesh> meshes, double tolerance = 1e-6);

}  // namespace capbound
