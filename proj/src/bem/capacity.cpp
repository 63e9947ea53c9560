#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "capbound/bem.hpp"
#include "capbound/error.hpp"
#include "common/threads.hpp"

namespace capbound {

namespace {

constexpr int kMaxSubdivisionDepth = 8;
// Structured meshes put many pieces exactly at dist = near_ratio * edge; the
// margin keeps those ties on the subdivided side under any rescaling, so the
// kernel stays scale covariant to rounding.
constexpr double kTieMargin = 1.0 + 1e-9;

double longest_edge(const Vec3& a, const Vec3& b, const Vec3& c) {
  return std::sqrt(std::max({(b - a).squaredNorm(), (c - b).squaredNorm(), (a - c).squaredNorm()}));
}

double potential_recursive(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x,
                           double near_ratio, int depth) {
  const Vec3 centroid = (a + b + c) / 3.0;
  const double dist = (x - centroid).norm();
  if (depth >= kMaxSubdivisionDepth || dist >= kTieMargin * near_ratio * longest_edge(a, b, c)) {
    return 0.5 * (b - a).cross(c - a).norm() / dist;
  }
  const Vec3 ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
  return potential_recursive(a, ab, ca, x, near_ratio, depth + 1) +
         potential_recursive(ab, b, bc, x, near_ratio, depth + 1) +
         potential_recursive(ca, bc, c, x, near_ratio, depth + 1) +
         potential_recursive(ab, bc, ca, x, near_ratio, depth + 1);
}

}  // namespace

double triangle_self_potential(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x) {
  // Fan the triangle from x; the piece over edge (p, q) at perpendicular
  // distance d integrates to d * [asinh(s/d)] between the edge endpoints.
  const Vec3 normal = (b - a).cross(c - a).normalized();
  const std::array<Vec3, 3> v = {a, b, c};
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Vec3& p = v[k];
    const Vec3& q = v[(k + 1) % 3];
    const Vec3 t = (q - p).normalized();
    const Vec3 outward = t.cross(normal);
    const double d = (p - x).dot(outward);
    if (std::abs(d) < 1e-300) continue;
    const double s1 = (p - x).dot(t);
    const double s2 = (q - x).dot(t);
    total += d * (std::asinh(s2 / d) - std::asinh(s1 / d));
  }
  return total;
}

double triangle_potential(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x,
                          double near_ratio) {
  return potential_recursive(a, b, c, x, near_ratio, 0);
}

CapacitySolution solve_capacity(const TriMesh& mesh, double tolerance) {
  if (!(tolerance > 0.0 && tolerance <= 1e-2)) {
    throw InputError("capacity tolerance must lie in (0, 1e-2]");
  }
  const std::size_t n = mesh.face_count();
  std::vector<Vec3> centroid(n);
  std::vector<double> area(n);
  for (std::size_t f = 0; f < n; ++f) {
    centroid[f] = mesh.face_centroid(f);
    area[f] = mesh.face_area(f);
  }

  Eigen::MatrixXd kernel(n, n);
  detail::parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Face& tri = mesh.face(j);
      const Vec3& a = mesh.vertex(tri[0]);
      const Vec3& b = mesh.vertex(tri[1]);
      const Vec3& c = mesh.vertex(tri[2]);
      kernel(i, j) = i == j ? triangle_self_potential(a, b, c, centroid[i])
                            : triangle_potential(a, b, c, centroid[i]);
    }
  });

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(kernel);
  CapacitySolution sol;
  const double rcond = lu.rcond();
  sol.condition_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(sol.condition_estimate <= kMaxConditionNumber)) {
    std::ostringstream msg;
    msg << "collocation matrix is ill conditioned (condition estimate " << sol.condition_estimate
        << " > " << kMaxConditionNumber << ")";
    throw NumericalError(msg.str());
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  const Eigen::VectorXd sigma = lu.solve(ones);
  sol.residual = (kernel * sigma - ones).cwiseAbs().maxCoeff();
  if (!(sol.residual < tolerance)) {
    std::ostringstream msg;
    msg << "collocation residual " << sol.residual << " does not meet tolerance " << tolerance;
    throw NumericalError(msg.str());
  }

  sol.density.assign(sigma.data(), sigma.data() + n);
  for (std::size_t f = 0; f < n; ++f) {
    if (!(sol.density[f] > 0.0)) {
      std::ostringstream msg;
      msg << "nonpositive equilibrium density " << sol.density[f] << " on face " << f
          << " (bad mesh or orientation)";
      throw NumericalError(msg.str());
    }
    sol.capacity += sol.density[f] * area[f];
  }
  sol.mesh_size = mesh.max_edge_length();
  return sol;
}

}  // namespace capbound
