#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "capbound/error.hpp"
#include "capbound/mesh.hpp"

namespace capbound {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("invalid primitive: " + what);
}

void require_subdivisions(int n) { require(n >= 1, "subdivisions must be >= 1"); }

void require_positive(double x, const char* name) {
  require(std::isfinite(x) && x > 0.0, std::string(name) + " must be > 0");
}

// Unit icosphere: icosahedron refined `levels` times by 1-to-4 midpoint
// splitting, every new vertex projected onto the sphere.
std::pair<std::vector<Vec3>, std::vector<Face>> unit_icosphere(int levels) {
  const double phi = std::numbers::phi;
  std::vector<Vec3> v = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                         {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                         {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vec3& p : v) p.normalize();
  std::vector<Face> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                         {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                         {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                         {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (Face& tri : f) {
    const Vec3 n = (v[tri[1]] - v[tri[0]]).cross(v[tri[2]] - v[tri[0]]);
    if (n.dot(v[tri[0]] + v[tri[1]] + v[tri[2]]) < 0.0) std::swap(tri[1], tri[2]);
  }
  for (int level = 0; level < levels; ++level) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      v.push_back((v[a] + v[b]).normalized());
      const int idx = static_cast<int>(v.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<Face> refined;
    refined.reserve(f.size() * 4);
    for (const Face& tri : f) {
      const int ab = mid(tri[0], tri[1]);
      const int bc = mid(tri[1], tri[2]);
      const int ca = mid(tri[2], tri[0]);
      refined.push_back({tri[0], ab, ca});
      refined.push_back({tri[1], bc, ab});
      refined.push_back({tri[2], ca, bc});
      refined.push_back({ab, bc, ca});
    }
    f = std::move(refined);
  }
  return {std::move(v), std::move(f)};
}

// Cube-surface lattice coordinates along one axis: `band` cells across each
// rounded strip of width `rounding` and enough flat cells to keep the spacing
// comparable.
std::vector<double> box_axis(double half, double rounding, int band) {
  const double inner = half - rounding;
  const int flat = std::max(1, static_cast<int>(std::ceil(2.0 * inner * band / rounding)));
  std::vector<double> xs;
  for (int i = 0; i < band; ++i) xs.push_back(-half + rounding * i / band);
  for (int i = 0; i < flat; ++i) xs.push_back(-inner + 2.0 * inner * i / flat);
  for (int i = 0; i <= band; ++i) xs.push_back(inner + rounding * i / band);
  return xs;
}

TriMesh rounded_box(const BoxPrimitive& box) {
  const Vec3 half(box.lx / 2, box.ly / 2, box.lz / 2);
  const Vec3 inner = half - Vec3::Constant(box.rounding);
  const std::array<std::vector<double>, 3> axis = {box_axis(half.x(), box.rounding, box.subdivisions),
                                                   box_axis(half.y(), box.rounding, box.subdivisions),
                                                   box_axis(half.z(), box.rounding, box.subdivisions)};
  const std::array<int, 3> last = {static_cast<int>(axis[0].size()) - 1,
                                   static_cast<int>(axis[1].size()) - 1,
                                   static_cast<int>(axis[2].size()) - 1};

  std::vector<Vec3> vertices;
  std::map<std::array<int, 3>, int> index;
  auto vertex = [&](const std::array<int, 3>& ijk) {
    const auto it = index.find(ijk);
    if (it != index.end()) return it->second;
    const Vec3 p(axis[0][ijk[0]], axis[1][ijk[1]], axis[2][ijk[2]]);
    const Vec3 core = p.cwiseMax(-inner).cwiseMin(inner);
    const Vec3 offset = p - core;
    vertices.push_back(core + box.rounding * offset.normalized());
    const int idx = static_cast<int>(vertices.size()) - 1;
    index.emplace(ijk, idx);
    return idx;
  };

  std::vector<Face> faces;
  for (int normal_axis = 0; normal_axis < 3; ++normal_axis) {
    // (u, v, normal_axis) is a cyclic permutation, so CCW in (u, v) faces +normal.
    const int u = (normal_axis + 1) % 3;
    const int w = (normal_axis + 2) % 3;
    for (int side = 0; side < 2; ++side) {
      for (int i = 0; i < last[u]; ++i) {
        for (int j = 0; j < last[w]; ++j) {
          auto at = [&](int di, int dj) {
            std::array<int, 3> ijk{};
            ijk[normal_axis] = side == 0 ? 0 : last[normal_axis];
            ijk[u] = i + di;
            ijk[w] = j + dj;
            return vertex(ijk);
          };
          const int a = at(0, 0), b = at(1, 0), c = at(1, 1), d = at(0, 1);
          if (side == 1) {
            faces.push_back({a, b, c});
            faces.push_back({a, c, d});
          } else {
            faces.push_back({a, c, b});
            faces.push_back({a, d, c});
          }
        }
      }
    }
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

TriMesh torus(const TorusPrimitive& t) {
  const int minor_segments = 6 * t.subdivisions;
  const int major_segments =
      static_cast<int>(std::ceil(minor_segments * t.major / t.minor));
  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(minor_segments) * major_segments);
  for (int i = 0; i < major_segments; ++i) {
    const double u = 2.0 * std::numbers::pi * i / major_segments;
    for (int j = 0; j < minor_segments; ++j) {
      const double v = 2.0 * std::numbers::pi * j / minor_segments;
      const double ring = t.major + t.minor * std::cos(v);
      vertices.emplace_back(ring * std::cos(u), ring * std::sin(u), t.minor * std::sin(v));
    }
  }
  auto id = [&](int i, int j) {
    return (i % major_segments) * minor_segments + (j % minor_segments);
  };
  std::vector<Face> faces;
  for (int i = 0; i < major_segments; ++i) {
    for (int j = 0; j < minor_segments; ++j) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      faces.push_back({a, b, c});
      faces.push_back({a, c, d});
    }
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

double parse_number(std::string_view token, std::string_view spec) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("invalid primitive spec '" + std::string(spec) + "': bad number '" +
                     std::string(token) + "'");
  }
  return value;
}

int parse_count(std::string_view token, std::string_view spec) {
  const double x = parse_number(token, spec);
  if (x != std::floor(x)) {
    throw InputError("invalid primitive spec '" + std::string(spec) +
                     "': subdivisions must be an integer");
  }
  return static_cast<int>(x);
}

}  // namespace

TriMesh make_primitive(const Primitive& kind) {
  return std::visit(
      [](const auto& p) -> TriMesh {
        using T = std::decay_t<decltype(p)>;
        require_subdivisions(p.subdivisions);
        if constexpr (std::is_same_v<T, SpherePrimitive>) {
          require_positive(p.radius, "radius");
          auto [v, f] = unit_icosphere(p.subdivisions);
          for (Vec3& x : v) x *= p.radius;
          return TriMesh(std::move(v), std::move(f));
        } else if constexpr (std::is_same_v<T, SpheroidPrimitive>) {
          require_positive(p.polar, "polar semi-axis");
          require_positive(p.equatorial, "equatorial semi-axis");
          auto [v, f] = unit_icosphere(p.subdivisions);
          for (Vec3& x : v) x = Vec3(p.equatorial * x.x(), p.equatorial * x.y(), p.polar * x.z());
          return TriMesh(std::move(v), std::move(f));
        } else if constexpr (std::is_same_v<T, BoxPrimitive>) {
          require_positive(p.lx, "lx");
          require_positive(p.ly, "ly");
          require_positive(p.lz, "lz");
          require_positive(p.rounding, "rounding");
          require(2.0 * p.rounding < std::min({p.lx, p.ly, p.lz}),
                  "rounding must be less than half the smallest edge");
          return rounded_box(p);
        } else {
          require_positive(p.major, "major radius");
          require_positive(p.minor, "minor radius");
          require(p.major > p.minor, "torus needs major radius > minor radius");
          return torus(p);
        }
      },
      kind);
}

Primitive parse_primitive(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const std::string_view kind = parts[0];
  auto expect = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      throw InputError("invalid primitive spec '" + std::string(spec) + "': " + std::string(kind) +
                       " takes " + std::to_string(n) + " parameters");
    }
  };
  if (kind == "sphere") {
    expect(2);
    return SpherePrimitive{parse_number(parts[1], spec), parse_count(parts[2], spec)};
  }
  if (kind == "spheroid") {
    expect(3);
    return SpheroidPrimitive{parse_number(parts[1], spec), parse_number(parts[2], spec),
                             parse_count(parts[3], spec)};
  }
  if (kind == "box") {
    expect(5);
    return BoxPrimitive{parse_number(parts[1], spec), parse_number(parts[2], spec),
                        parse_number(parts[3], spec), parse_number(parts[4], spec),
                        parse_count(parts[5], spec)};
  }
  if (kind == "torus") {
    expect(3);
    return TorusPrimitive{parse_number(parts[1], spec), parse_number(parts[2], spec),
                          parse_count(parts[3], spec)};
  }
  throw InputError("unknown primitive kind '" + std::string(kind) +
                   "' (expected sphere, spheroid, box or torus)");
}

std::string primitive_spec(const Primitive& kind) {
  // Shortest round-trip decimals, so specs parse back to identical primitives.
  auto num = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  return std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        std::string out;
        if constexpr (std::is_same_v<T, SpherePrimitive>) {
          out = "sphere:" + num(p.radius);
        } else if constexpr (std::is_same_v<T, SpheroidPrimitive>) {
          out = "spheroid:" + num(p.polar) + ':' + num(p.equatorial);
        } else if constexpr (std::is_same_v<T, BoxPrimitive>) {
          out = "box:" + num(p.lx) + ':' + num(p.ly) + ':' + num(p.lz) + ':' + num(p.rounding);
        } else {
          out = "torus:" + num(p.major) + ':' + num(p.minor);
        }
        return out + ':' + std::to_string(p.subdivisions);
      },
      kind);
}

}  // namespace capbound
