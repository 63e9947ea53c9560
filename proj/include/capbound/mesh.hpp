#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace capbound {

using Vec3 = Eigen::Vector3d;
using Face = std::array<int, 3>;

/// Faces with area below this fraction of the squared mesh diameter are rejected.
inline constexpr double kDegenerateFaceTolerance = 1e-12;

/// Closed, consistently oriented triangulated surface in R^3.
///
/// The constructor validates the manifold invariants (every edge shared by
/// exactly two faces traversed in opposite directions, no degenerate faces,
/// even Euler characteristic <= 2) and throws InputError naming the offending
/// edge or face otherwise. Instances are immutable.
class TriMesh {
 public:
  TriMesh(std::vector<Vec3> vertices, std::vector<Face> faces);

  std::span<const Vec3> vertices() const { return vertices_; }
  std::span<const Face> faces() const { return faces_; }
  const Vec3& vertex(std::size_t i) const { return vertices_[i]; }
  const Face& face(std::size_t f) const { return faces_[f]; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  int euler_characteristic() const;
  int genus() const { return (2 - euler_characteristic()) / 2; }

  /// Largest distance between two vertices.
  double diameter() const { return diameter_; }
  double max_edge_length() const { return max_edge_; }

  double face_area(std::size_t f) const;
  /// Cross product (v1 - v0) x (v2 - v0); its norm is twice the face area.
  Vec3 face_area_vector(std::size_t f) const;
  Vec3 face_centroid(std::size_t f) const;

  /// Copy with every vertex multiplied by `factor`.
  TriMesh scaled(double factor) const;

 private:
  void validate();

  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::size_t edge_count_ = 0;
  double diameter_ = 0.0;
  double max_edge_ = 0.0;
};

enum class MeshFormat { Obj, Ply };

/// Format implied by the file extension (.obj / .ply, case-insensitive).
MeshFormat mesh_format_from_path(const std::filesystem::path& path);

TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format);
TriMesh load_mesh(const std::filesystem::path& path);

TriMesh parse_obj(std::string_view text);
TriMesh parse_ply(std::string_view text);

void save_mesh(const TriMesh& mesh, const std::filesystem::path& path, MeshFormat format);
void save_mesh(const TriMesh& mesh, const std::filesystem::path& path);

// Test-corpus generators. `subdivisions` controls resolution; every kind
// produces more vertices as it grows.

/// Icosphere: 20 * 4^subdivisions faces.
struct SpherePrimitive {
  double radius = 1.0;
  int subdivisions = 3;
};

/// Spheroid with semi-axis `polar` along z and `equatorial` in the xy-plane.
/// polar > equatorial is prolate.
struct SpheroidPrimitive {
  double polar = 2.0;
  double equatorial = 1.0;
  int subdivisions = 3;
};

/// Box with edge lengths lx, ly, lz whose edges and corners are rounded with
/// radius `rounding` (0 < rounding < min(l)/2).
struct BoxPrimitive {
  double lx = 2.0, ly = 2.0, lz = 2.0;
  double rounding = 0.5;
  int subdivisions = 3;
};

/// Torus of revolution about z, tube radius `minor` < `major`.
struct TorusPrimitive {
  double major = 2.0;
  double minor = 0.5;
  int subdivisions = 3;
};

using Primitive = std::variant<SpherePrimitive, SpheroidPrimitive, BoxPrimitive, TorusPrimitive>;

TriMesh make_primitive(const Primitive& kind);

/// Parses "sphere:r:n", "spheroid:a:b:n", "box:lx:ly:lz:rounding:n", "torus:R:r:n".
Primitive parse_primitive(std::string_view spec);
/// Canonical spec string, the inverse of parse_primitive.
std::string primitive_spec(const Primitive& kind);

/// Scalar quantities of a closed surface. Mean curvature uses the
/// H = k1 + k2 convention, so the unit sphere has H = 2 and willmore = 16 pi.
struct SurfaceMeasures {
  double area = 0.0;
  double total_mean_curvature = 0.0;  ///< integral of signed H
  double willmore = 0.0;              ///< integral of H^2
  double volume = 0.0;                ///< absolute enclosed volume
  double hawking_mass = 0.0;
  int genus = 0;
  int euler_characteristic = 2;
  int orientation_sign = 1;       ///< sign of the signed volume; -1 means inward normals
  int obtuse_fallback_faces = 0;  ///< faces whose vertex areas used the area/3 rule
  bool has_negative_mean_curvature = false;
  double min_mean_curvature = 0.0;  ///< smallest signed vertex H
};

/// sqrt(area / 16 pi) * (1 - willmore / 16 pi).
double hawking_mass(double area, double willmore);

/// Per-vertex discrete curvature data (cotangent mean-curvature vector with
/// mixed Voronoi areas).
struct VertexCurvature {
  std::vector<double> mean_curvature;  ///< signed H_i
  std::vector<double> area;            ///< mixed area A_i, sums to the surface area
  int obtuse_fallback_faces = 0;
};

VertexCurvature vertex_curvature(const TriMesh& mesh);

SurfaceMeasures measure(const TriMesh& mesh);

}  // namespace capbound
