#include "capbound/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "capbound/error.hpp"

namespace capbound {

namespace {

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

double max_pairwise_distance(std::span<const Vec3> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, (pts[i] - pts[j]).squaredNorm());
    }
  }
  return std::sqrt(best);
}

}  // namespace

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  validate();
}

void TriMesh::validate() {
  if (vertices_.empty() || faces_.empty()) throw InputError("empty mesh");
  const int nv = static_cast<int>(vertices_.size());
  for (const Vec3& v : vertices_) {
    if (!v.allFinite()) throw InputError("non-finite vertex coordinate");
  }

  // Directed half-edges: each must appear once, and its twin exactly once.
  std::unordered_map<std::uint64_t, int> directed;
  directed.reserve(faces_.size() * 3);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& tri = faces_[f];
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= nv) {
        std::ostringstream msg;
        msg << "face " << f << " references vertex " << tri[k] << " out of range";
        throw InputError(msg.str());
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      std::ostringstream msg;
      msg << "degenerate face " << f << " repeats a vertex";
      throw InputError(msg.str());
    }
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k];
      const int b = tri[(k + 1) % 3];
      if (!directed.emplace(edge_key(a, b), static_cast<int>(f)).second) {
        std::ostringstream msg;
        msg << "inconsistent orientation: edge (" << a << ", " << b
            << ") traversed in the same direction by faces " << directed[edge_key(a, b)]
            << " and " << f;
        throw InputError(msg.str());
      }
    }
  }
  std::size_t undirected = 0;
  for (const auto& [key, face] : directed) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffu);
    if (!directed.contains(edge_key(b, a))) {
      std::ostringstream msg;
      msg << "open mesh: edge (" << a << ", " << b << ") of face " << face
          << " has no opposite face";
      throw InputError(msg.str());
    }
    if (a < b) ++undirected;
  }
  edge_count_ = undirected;

  diameter_ = max_pairwise_distance(vertices_);
  for (const Face& tri : faces_) {
    for (int k = 0; k < 3; ++k) {
      max_edge_ = std::max(max_edge_, (vertices_[tri[k]] - vertices_[tri[(k + 1) % 3]]).norm());
    }
  }
  const double min_area = kDegenerateFaceTolerance * diameter_ * diameter_;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (!(face_area(f) > min_area)) {
      std::ostringstream msg;
      msg << "degenerate face " << f << ": area " << face_area(f) << " below tolerance "
          << min_area;
      throw InputError(msg.str());
    }
  }

  const int chi = euler_characteristic();
  if (chi % 2 != 0 || chi > 2) {
    std::ostringstream msg;
    msg << "invalid Euler characteristic " << chi << " (must be even and <= 2)";
    throw InputError(msg.str());
  }
}

int TriMesh::euler_characteristic() const {
  return static_cast<int>(vertices_.size()) - static_cast<int>(edge_count_) +
         static_cast<int>(faces_.size());
}

Vec3 TriMesh::face_area_vector(std::size_t f) const {
  const Face& tri = faces_[f];
  return (vertices_[tri[1]] - vertices_[tri[0]]).cross(vertices_[tri[2]] - vertices_[tri[0]]);
}

double TriMesh::face_area(std::size_t f) const { return 0.5 * face_area_vector(f).norm(); }

Vec3 TriMesh::face_centroid(std::size_t f) const {
  const Face& tri = faces_[f];
  return (vertices_[tri[0]] + vertices_[tri[1]] + vertices_[tri[2]]) / 3.0;
}

TriMesh TriMesh::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw InputError("scale factor must be positive");
  std::vector<Vec3> pts = vertices_;
  for (Vec3& p : pts) p *= factor;
  return TriMesh(std::move(pts), faces_);
}

}  // namespace capbound
