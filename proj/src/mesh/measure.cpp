#include <algorithm>
#include <cmath>
#include <numbers>

#include "capbound/mesh.hpp"

namespace capbound {

double hawking_mass(double area, double willmore) {
  const double sixteen_pi = 16.0 * std::numbers::pi;
  return std::sqrt(area / sixteen_pi) * (1.0 - willmore / sixteen_pi);
}

VertexCurvature vertex_curvature(const TriMesh& mesh) {
  const std::size_t nv = mesh.vertex_count();
  std::vector<Vec3> laplacian(nv, Vec3::Zero());  // sum of (cot a + cot b)(x_i - x_j)
  std::vector<Vec3> normal(nv, Vec3::Zero());
  VertexCurvature out;
  out.area.assign(nv, 0.0);

  for (std::size_t f = 0; f < mesh.face_count(); ++f) {
    const Face& tri = mesh.face(f);
    const Vec3 area_vec = mesh.face_area_vector(f);
    const double twice_area = area_vec.norm();
    std::array<double, 3> cot{};
    bool obtuse = false;
    for (int k = 0; k < 3; ++k) {
      const Vec3& p = mesh.vertex(tri[k]);
      const Vec3 e1 = mesh.vertex(tri[(k + 1) % 3]) - p;
      const Vec3 e2 = mesh.vertex(tri[(k + 2) % 3]) - p;
      const double dot = e1.dot(e2);
      cot[k] = dot / twice_area;
      obtuse = obtuse || dot < 0.0;
    }
    for (int k = 0; k < 3; ++k) {
      // Edge opposite corner k joins corners k+1 and k+2.
      const int i = tri[(k + 1) % 3];
      const int j = tri[(k + 2) % 3];
      const Vec3 d = mesh.vertex(i) - mesh.vertex(j);
      laplacian[i] += cot[k] * d;
      laplacian[j] -= cot[k] * d;
      if (!obtuse) {
        const double voronoi = 0.125 * cot[k] * d.squaredNorm();
        out.area[i] += voronoi;
        out.area[j] += voronoi;
      }
      normal[tri[k]] += area_vec;
    }
    if (obtuse) {
      ++out.obtuse_fallback_faces;
      for (int k = 0; k < 3; ++k) out.area[tri[k]] += twice_area / 6.0;
    }
  }

  out.mean_curvature.resize(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    // Mean-curvature vector K = (1/2A) sum (cot a + cot b)(x_i - x_j) has |K| = k1 + k2
    // and points along the outward normal where the surface is convex.
    const Vec3 k = laplacian[i] / (2.0 * out.area[i]);
    const double sign = k.dot(normal[i]) < 0.0 ? -1.0 : 1.0;
    out.mean_curvature[i] = sign * k.norm();
  }
  return out;
}

SurfaceMeasures measure(const TriMesh& mesh) {
  SurfaceMeasures m;
  double signed_volume = 0.0;
  for (std::size_t f = 0; f < mesh.face_count(); ++f) {
    m.area += mesh.face_area(f);
    const Face& tri = mesh.face(f);
    signed_volume += mesh.vertex(tri[0]).dot(mesh.vertex(tri[1]).cross(mesh.vertex(tri[2]))) / 6.0;
  }
  m.volume = std::abs(signed_volume);
  m.orientation_sign = signed_volume < 0.0 ? -1 : 1;

  const VertexCurvature curv = vertex_curvature(mesh);
  m.obtuse_fallback_faces = curv.obtuse_fallback_faces;
  m.min_mean_curvature = m.orientation_sign * curv.mean_curvature[0];
  // Flat regions give H = 0 up to rounding; only flag clearly negative values.
  const double flat_slack = 1e-8 / mesh.diameter();
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    // Vertex normals follow the face winding; inward-wound meshes flip the sign.
    const double h = m.orientation_sign * curv.mean_curvature[i];
    m.total_mean_curvature += h * curv.area[i];
    m.willmore += h * h * curv.area[i];
    m.min_mean_curvature = std::min(m.min_mean_curvature, h);
  }
  m.has_negative_mean_curvature = m.min_mean_curvature < -flat_slack;
  m.hawking_mass = hawking_mass(m.area, m.willmore);
  m.euler_characteristic = mesh.euler_characteristic();
  m.genus = mesh.genus();
  return m;
}

}  // namespace capbound
