#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "capbound/error.hpp"
#include "capbound/mesh.hpp"

namespace capbound {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open mesh file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string line_error(std::size_t line, const std::string& what) {
  return "parse error at line " + std::to_string(line) + ": " + what;
}

// Vertex reference of an OBJ face record: "7", "7/1", "7//3", "7/1/3", or negative.
int parse_obj_index(const std::string& token, int vertex_count, std::size_t line) {
  const std::string head = token.substr(0, token.find('/'));
  int value = 0;
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
  if (ec != std::errc() || ptr != head.data() + head.size() || value == 0) {
    throw InputError(line_error(line, "bad face index '" + token + "'"));
  }
  return value > 0 ? value - 1 : vertex_count + value;
}

}  // namespace

MeshFormat mesh_format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".obj") return MeshFormat::Obj;
  if (ext == ".ply") return MeshFormat::Ply;
  throw InputError("unrecognised mesh extension '" + ext + "' (expected .obj or .ply)");
}

TriMesh parse_obj(std::string_view text) {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream rec(line);
    std::string tag;
    if (!(rec >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 p;
      if (!(rec >> p.x() >> p.y() >> p.z())) throw InputError(line_error(lineno, "bad vertex record"));
      vertices.push_back(p);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string token;
      while (rec >> token) {
        idx.push_back(parse_obj_index(token, static_cast<int>(vertices.size()), lineno));
      }
      if (idx.size() != 3) {
        throw InputError(line_error(lineno, "only triangular faces are supported, got " +
                                                std::to_string(idx.size()) + " vertices"));
      }
      faces.push_back({idx[0], idx[1], idx[2]});
    }
    // vn, vt, g, o, s, usemtl ... carry nothing we need.
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

TriMesh parse_ply(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line() || line != "ply") throw InputError("not a PLY file (missing 'ply' magic)");

  struct Element {
    std::string name;
    std::size_t count = 0;
    std::vector<std::string> properties;  // property names; list properties are "list:<name>"
  };
  std::vector<Element> elements;
  bool ascii = false;
  for (;;) {
    if (!next_line()) throw InputError("PLY header not terminated by end_header");
    std::istringstream rec(line);
    std::string word;
    rec >> word;
    if (word == "end_header") break;
    if (word == "format") {
      std::string fmt;
      rec >> fmt;
      ascii = fmt == "ascii";
    } else if (word == "element") {
      Element e;
      if (!(rec >> e.name >> e.count)) throw InputError(line_error(lineno, "bad element line"));
      elements.push_back(e);
    } else if (word == "property") {
      if (elements.empty()) throw InputError(line_error(lineno, "property before element"));
      std::string type;
      rec >> type;
      std::string name;
      if (type == "list") {
        std::string count_type, item_type;
        rec >> count_type >> item_type >> name;
        name = "list:" + name;
      } else {
        rec >> name;
      }
      elements.back().properties.push_back(name);
    }
  }
  if (!ascii) throw InputError("only ASCII PLY is supported");

  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  for (const Element& e : elements) {
    for (std::size_t n = 0; n < e.count; ++n) {
      if (!next_line()) throw InputError("PLY body truncated in element '" + e.name + "'");
      std::istringstream rec(line);
      if (e.name == "vertex") {
        Vec3 p = Vec3::Zero();
        for (const std::string& prop : e.properties) {
          double value = 0.0;
          if (prop.starts_with("list:")) {
            std::size_t k = 0;
            rec >> k;
            for (std::size_t i = 0; i < k; ++i) rec >> value;
            continue;
          }
          if (!(rec >> value)) throw InputError(line_error(lineno, "bad vertex record"));
          if (prop == "x") p.x() = value;
          if (prop == "y") p.y() = value;
          if (prop == "z") p.z() = value;
        }
        vertices.push_back(p);
      } else if (e.name == "face") {
        bool seen = false;
        for (const std::string& prop : e.properties) {
          if (!prop.starts_with("list:")) {
            double skip = 0.0;
            rec >> skip;
            continue;
          }
          std::size_t k = 0;
          if (!(rec >> k)) throw InputError(line_error(lineno, "bad face record"));
          std::vector<long> idx(k);
          for (long& i : idx) {
            if (!(rec >> i)) throw InputError(line_error(lineno, "bad face record"));
          }
          if (prop == "list:vertex_indices" || prop == "list:vertex_index") {
            if (k != 3) {
              throw InputError(line_error(lineno, "only triangular faces are supported"));
            }
            faces.push_back({static_cast<int>(idx[0]), static_cast<int>(idx[1]),
                             static_cast<int>(idx[2])});
            seen = true;
          }
        }
        if (!seen) throw InputError(line_error(lineno, "face element without vertex_indices"));
      }
    }
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format) {
  const std::string text = read_file(path);
  try {
    return format == MeshFormat::Obj ? parse_obj(text) : parse_ply(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

TriMesh load_mesh(const std::filesystem::path& path) {
  return load_mesh(path, mesh_format_from_path(path));
}

void save_mesh(const TriMesh& mesh, const std::filesystem::path& path, MeshFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write mesh file '" + path.string() + "'");
  out.precision(17);
  if (format == MeshFormat::Obj) {
    for (const Vec3& v : mesh.vertices()) out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    for (const Face& f : mesh.faces()) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  } else {
    out << "ply\nformat ascii 1.0\n"
        << "element vertex " << mesh.vertex_count() << "\n"
        << "property double x\nproperty double y\nproperty double z\n"
        << "element face " << mesh.face_count() << "\n"
        << "property list uchar int vertex_indices\nend_header\n";
    for (const Vec3& v : mesh.vertices()) out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    for (const Face& f : mesh.faces()) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  }
  if (!out) throw InputError("failed writing mesh file '" + path.string() + "'");
}

void save_mesh(const TriMesh& mesh, const std::filesystem::path& path) {
  save_mesh(mesh, path, mesh_format_from_path(path));
}

}  // namespace capbound
