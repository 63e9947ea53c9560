#include "report/reports.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "capbound/bem.hpp"
#include "capbound/error.hpp"
#include "capbound/mesh.hpp"

namespace capbound::report {

namespace {

constexpr int kProfileSamples = 65;
constexpr double kProfileTimeMax = 8.0;

Json num(double v, std::string_view field) { return finite(v, field); }

Json opt_num(const std::optional<double>& v, std::string_view field) {
  return v ? Json(finite(*v, field)) : Json(nullptr);
}

std::string lowercase_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

Json mesh_json(const std::filesystem::path& path, const TriMesh& mesh) {
  Json j;
  j["name"] = path.filename().string();
  j["vertices"] = mesh.vertex_count();
  j["faces"] = mesh.face_count();
  j["edges"] = mesh.edge_count();
  j["euler_characteristic"] = mesh.euler_characteristic();
  j["genus"] = mesh.genus();
  j["diameter"] = num(mesh.diameter(), "diameter");
  j["max_edge_length"] = num(mesh.max_edge_length(), "max_edge_length");
  return j;
}

Json capacity_json(const CapacitySolution& s, double tolerance) {
  Json j;
  j["capacity"] = num(s.capacity, "capacity");
  j["residual"] = num(s.residual, "residual");
  j["tolerance"] = num(tolerance, "tolerance");
  j["mesh_size"] = num(s.mesh_size, "mesh_size");
  j["condition_estimate"] = num(s.condition_estimate, "condition_estimate");
  return j;
}

Json geometry_json(const SphereGeometry& g) {
  Json j;
  j["radius"] = num(g.radius, "radius");
  j["area"] = num(g.area, "area");
  j["mean_curvature"] = num(g.mean_curvature, "mean_curvature");
  j["willmore"] = num(g.willmore, "willmore");
  j["hawking_mass"] = num(g.hawking_mass, "hawking_mass");
  j["scalar_curvature"] = num(g.scalar_curvature, "scalar_curvature");
  return j;
}

Json mass_bound_json(const MassBoundCheck& c) {
  Json j;
  j["hypothesis_ok"] = c.hypothesis_ok;
  if (!c.hypothesis_ok) j["status"] = "hypothesis violated: boundary Hawking mass < 0";
  j["mass"] = num(c.mass, "mass");
  j["boundary_hawking_mass"] = num(c.boundary_hawking_mass, "boundary_hawking_mass");
  j["alpha"] = num(c.alpha, "alpha");
  j["capacity"] = num(c.capacity, "capacity");
  j["scaled_capacity"] = num(c.scaled_capacity, "scaled_capacity");
  j["holds"] = c.hypothesis_ok ? Json(c.holds) : Json(nullptr);
  j["equality"] = c.hypothesis_ok ? Json(c.equality) : Json(nullptr);
  return j;
}

std::vector<double> uniform_times(double t_max, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = t_max * k / (n - 1);
  return t;
}

}  // namespace

Json envelope(Command command, const Json& config) {
  Json doc;
  doc["schema"] = kSchema;
  doc["tool"] = {{"name", "capbound"}, {"version", CAPBOUND_VERSION}};
  doc["units"] = kUnits;
  doc["command"] = command_name(command);
  doc["config"] = config;
  return doc;
}

Json error_object(const Error& error) {
  Json j;
  j["code"] = static_cast<int>(error.kind());
  j["kind"] = error.kind() == ErrorKind::Input ? "input" : "numerical";
  j["message"] = error.what();
  return j;
}

Json measures_json(const SurfaceMeasures& m) {
  Json j;
  j["area"] = num(m.area, "area");
  j["total_mean_curvature"] = num(m.total_mean_curvature, "total_mean_curvature");
  j["willmore"] = num(m.willmore, "willmore");
  j["volume"] = num(m.volume, "volume");
  j["hawking_mass"] = num(m.hawking_mass, "hawking_mass");
  j["genus"] = m.genus;
  j["euler_characteristic"] = m.euler_characteristic;
  j["orientation_sign"] = m.orientation_sign;
  j["obtuse_fallback_faces"] = m.obtuse_fallback_faces;
  j["has_negative_mean_curvature"] = m.has_negative_mean_curvature;
  j["min_mean_curvature"] = num(m.min_mean_curvature, "min_mean_curvature");
  return j;
}

Json bound_report_json(const BoundReport& r, double tolerance) {
  const SurfaceMeasures& m = r.measures;
  Json j;
  j["measures"] = measures_json(m);
  j["convex"] = r.convex;
  j["alpha"] = num(r.alpha, "alpha");

  Json lower;
  lower["volume_radius"] = {{"value", num(r.lower_volume, "lower_volume")},
                            {"inputs", {{"volume", num(m.volume, "volume")}}}};
  Json hawking = {{"value", opt_num(r.lower_hawking, "lower_hawking")},
                  {"inputs",
                   {{"area", num(m.area, "area")}, {"willmore", num(m.willmore, "willmore")}}}};
  if (!r.lower_hawking_reason.empty()) hawking["reason"] = r.lower_hawking_reason;
  lower["hawking_mass"] = hawking;
  j["lower_bounds"] = lower;

  Json upper;
  upper["bray_miao"] = {
      {"value", num(r.bray_miao, "bray_miao")},
      {"inputs", {{"area", num(m.area, "area")}, {"willmore", num(m.willmore, "willmore")}}}};
  Json szego = {{"value", opt_num(r.szego, "szego")},
                {"inputs",
                 {{"area", num(m.area, "area")},
                  {"half_mean_curvature", num(0.5 * m.total_mean_curvature, "half_mean_curvature")}}}};
  if (!r.szego_reason.empty()) szego["note"] = r.szego_reason;
  upper["szego"] = szego;
  upper["profile_imcf"] = {
      {"value", num(r.profile_imcf, "profile_imcf")},
      {"inputs",
       {{"area", num(m.area, "area")}, {"hawking_mass", num(m.hawking_mass, "hawking_mass")}}}};
  upper["profile_steiner"] = {
      {"value", opt_num(r.profile_steiner, "profile_steiner")},
      {"inputs",
       {{"area", num(m.area, "area")},
        {"total_mean_curvature", num(m.total_mean_curvature, "total_mean_curvature")}}}};
  j["upper_bounds"] = upper;

  if (r.bem) {
    j["bem"] = capacity_json(*r.bem, tolerance);
    Json checks;
    checks["ordering_ok"] = *r.ordering_ok;
    checks["bray_miao_gap"] = opt_num(r.bray_miao_gap, "bray_miao_gap");
    checks["szego_gap"] = opt_num(r.szego_gap, "szego_gap");
    checks["bray_miao_holds"] = r.bray_miao >= r.bem->capacity * (1.0 - tolerance);
    const HawkingCapacityCheck& h = *r.hawking_check;
    checks["hawking_capacity"] = {{"lhs", num(h.lhs, "lhs")},
                                  {"rhs", num(h.rhs, "rhs")},
                                  {"alpha", num(h.alpha, "alpha")},
                                  {"holds", h.holds}};
    j["checks"] = checks;
  } else {
    j["bem"] = nullptr;
  }
  return j;
}

Json radial_scan_json(const RadialScan& scan) {
  Json j;
  j["samples"] = scan.samples.size();
  j["hawking_monotone"] = scan.hawking_monotone;
  j["scalar_nonnegative"] = scan.scalar_nonnegative;
  Json dec = Json::array();
  for (const auto& [a, b] : scan.hawking_decreasing) {
    dec.push_back({num(a, "interval"), num(b, "interval")});
  }
  j["hawking_decreasing"] = dec;
  Json neg = Json::array();
  for (double r : scan.negative_scalar_radii) neg.push_back(num(r, "radius"));
  j["negative_scalar_radii"] = neg;
  const SphereGeometry& last = scan.samples.back().geometry;
  j["final"] = {{"t", num(scan.samples.back().t, "t")}, {"geometry", geometry_json(last)}};
  return j;
}

CsvTable radial_scan_csv(const RadialScan& scan) {
  CsvTable csv({"t", "r", "area", "H", "m_H", "R"});
  for (const RadialSample& s : scan.samples) {
    const SphereGeometry& g = s.geometry;
    csv.add_row({s.t, g.radius, g.area, g.mean_curvature, g.hawking_mass, g.scalar_curvature});
  }
  return csv;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InputError("corpus input '" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = lowercase_extension(entry.path());
    if (ext == ".obj" || ext == ".ply") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty()) throw InputError("corpus directory '" + dir.string() + "' has no meshes");
  return files;
}

Artifacts measure_artifacts(const std::filesystem::path& mesh_path) {
  const TriMesh mesh = load_mesh(mesh_path);
  Artifacts a;
  a.base = mesh_path.stem().string() + ".measure";
  a.result["mesh"] = mesh_json(mesh_path, mesh);
  a.result["measures"] = measures_json(measure(mesh));

  const VertexCurvature vc = vertex_curvature(mesh);
  CsvTable csv({"vertex", "x", "y", "z", "H", "area"});
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    const Vec3& p = mesh.vertex(i);
    csv.add_row({static_cast<long long>(i), p.x(), p.y(), p.z(), vc.mean_curvature[i], vc.area[i]});
  }
  a.files.push_back({a.base + "_vertices.csv", FileFormat::Csv, csv.text()});
  return a;
}

Artifacts capacity_artifacts(const std::filesystem::path& mesh_path, double tolerance) {
  const TriMesh mesh = load_mesh(mesh_path);
  const CapacitySolution sol = solve_capacity(mesh, tolerance);
  Artifacts a;
  a.base = mesh_path.stem().string() + ".capacity";
  a.result["mesh"] = mesh_json(mesh_path, mesh);
  a.result["bem"] = capacity_json(sol, tolerance);

  CsvTable csv({"face", "cx", "cy", "cz", "area", "density"});
  for (std::size_t f = 0; f < mesh.face_count(); ++f) {
    const Vec3 c = mesh.face_centroid(f);
    csv.add_row({static_cast<long long>(f), c.x(), c.y(), c.z(), mesh.face_area(f), sol.density[f]});
  }
  a.files.push_back({a.base + "_density.csv", FileFormat::Csv, csv.text()});
  return a;
}

Artifacts bounds_artifacts(const std::filesystem::path& mesh_path, bool bem, double tolerance) {
  const TriMesh mesh = load_mesh(mesh_path);
  BoundReportOptions options;
  options.with_bem = bem;
  options.tolerance = tolerance;
  const BoundReport r = bound_report(mesh, options);

  Artifacts a;
  a.base = mesh_path.stem().string() + ".bounds";
  a.result["mesh"] = mesh_json(mesh_path, mesh);
  const Json body = bound_report_json(r, tolerance);
  for (const auto& [key, value] : body.items()) a.result[key] = value;

  const ProfileFamily imcf(ImcfProfile{r.measures.area, r.measures.hawking_mass});
  std::optional<ProfileFamily> steiner;
  if (r.profile_steiner) {
    steiner.emplace(SteinerProfile{r.measures.area, r.measures.total_mean_curvature});
  }
  CsvTable csv({"t", "T_imcf", "f_imcf", "T_steiner", "f_steiner"});
  Series f_imcf{"f imcf", {}}, f_steiner{"f steiner", {}};
  for (double t : uniform_times(kProfileTimeMax, kProfileSamples)) {
    const double fi = evaluate_optimal_f(imcf, t);
    f_imcf.points.emplace_back(t, fi);
    CsvTable::Cell ts, fs;
    if (steiner) {
      ts = steiner->T(t);
      const double f = evaluate_optimal_f(*steiner, t);
      fs = f;
      f_steiner.points.emplace_back(t, f);
    }
    csv.add_row({t, imcf.T(t), fi, ts, fs});
  }
  a.files.push_back({a.base + "_profile.csv", FileFormat::Csv, csv.text()});

  std::vector<Series> profiles{f_imcf};
  if (steiner) profiles.push_back(f_steiner);
  a.files.push_back({a.base + "_profile.svg", FileFormat::Svg,
                     svg_line_plot("Optimal level-set profiles", "t", "f(t)", profiles)});

  // Each bound as a horizontal segment over [0, 1] for visual comparison.
  std::vector<Series> bounds;
  auto level = [&](std::string name, double v) {
    bounds.push_back({std::move(name), {{0.0, v}, {1.0, v}}});
  };
  level("volume radius", r.lower_volume);
  if (r.bem) level("C bem", r.bem->capacity);
  if (r.szego) level("szego", *r.szego);
  level("bray-miao", r.bray_miao);
  a.files.push_back({a.base + ".svg", FileFormat::Svg,
                     svg_line_plot("Capacity bounds: " + mesh_path.filename().string(), "",
                                   "capacity", bounds)});
  return a;
}

Artifacts schwarzschild_artifacts(double mass, double r0, double t_max, int steps) {
  const SchwarzschildClosedForms cf = schwarzschild_closed_forms(mass, r0);
  const SymmetricMetric metric = SymmetricMetric::schwarzschild(mass, r0);
  const SphereGeometry boundary = geometry_at(metric, r0);
  const double quadrature = radial_capacity(metric).capacity();
  const double bray_miao = bray_miao_bound(boundary.area, boundary.willmore);
  const ProfileFamily imcf(ImcfProfile{boundary.area, boundary.hawking_mass});
  const double profile = optimal_profile_bound(imcf).bound;
  const double closed_profile = imcf_closed_form_bound(boundary.area, boundary.hawking_mass);
  const RadialScan scan = imcf_trace(metric, t_max, steps);

  Artifacts a;
  a.base = "schwarzschild";
  Json& j = a.result;
  j["input"] = {{"m", num(mass, "m")}, {"r0", num(r0, "r0")}};
  j["closed_forms"] = {{"v0", num(cf.v0, "v0")},
                       {"capacity", num(cf.capacity, "capacity")},
                       {"u_at_2r0", num(cf.u(2.0 * r0), "u_at_2r0")}};
  j["boundary"] = geometry_json(boundary);
  j["capacity"] = {{"quadrature", num(quadrature, "quadrature")},
                   {"closed_form", num(cf.capacity, "closed_form")},
                   {"bray_miao", num(bray_miao, "bray_miao")},
                   {"imcf_profile", num(profile, "imcf_profile")},
                   {"imcf_closed_form", num(closed_profile, "imcf_closed_form")}};
  const double spread = std::max({quadrature, bray_miao, profile}) -
                        std::min({quadrature, bray_miao, profile});
  j["equality_chain"] = {{"max_abs_difference", num(std::max(spread, std::abs(quadrature - cf.capacity)),
                                                    "max_abs_difference")},
                         {"tolerance", 1e-8},
                         {"holds", std::max(spread, std::abs(quadrature - cf.capacity)) <= 1e-8}};
  j["adm_mass"] = num(adm_mass(metric), "adm_mass");
  j["mass_bound"] = mass_bound_json(mass_bound_check(metric));
  if (mass >= 0.0) {
    const StaticCheck sc = static_check(mass, r0);
    j["static_check"] = {{"min_lapse_squared", num(sc.min_lapse_squared, "min_lapse_squared")},
                         {"willmore_term", num(sc.willmore_term, "willmore_term")},
                         {"equality", sc.equality}};
  } else {
    j["static_check"] = {{"status", "not applicable: negative mass"}};
  }
  j["scan"] = radial_scan_json(scan);

  a.files.push_back({"schwarzschild_scan.csv", FileFormat::Csv, radial_scan_csv(scan).text()});

  CsvTable profile_csv({"t", "T", "f", "f0"});
  Series f{"f optimal", {}}, f0{"f0 closed form", {}};
  for (double t : uniform_times(t_max, steps)) {
    const double fv = evaluate_optimal_f(imcf, t);
    const double f0v = cf.f0(t);
    profile_csv.add_row({t, imcf.T(t), fv, f0v});
    f.points.emplace_back(t, fv);
    f0.points.emplace_back(t, f0v);
  }
  a.files.push_back({"schwarzschild_profile.csv", FileFormat::Csv, profile_csv.text()});
  const std::vector<Series> profiles{f, f0};
  a.files.push_back({"schwarzschild_profile.svg", FileFormat::Svg,
                     svg_line_plot("IMCF profile vs closed form", "t", "f(t)", profiles)});
  Series mh{"m_H", {}};
  for (const RadialSample& s : scan.samples) mh.points.emplace_back(s.t, s.geometry.hawking_mass);
  const std::vector<Series> trace{mh};
  a.files.push_back({"schwarzschild.svg", FileFormat::Svg,
                     svg_line_plot("Hawking mass along IMCF", "t", "m_H", trace)});
  return a;
}

Artifacts symmetric_artifacts(const std::filesystem::path& mass_fn, std::optional<double> r0,
                              double alpha, double t_max, int steps) {
  const SymmetricMetric metric =
      load_mass_function_csv(mass_fn, r0.value_or(std::numeric_limits<double>::quiet_NaN()));
  const SphereGeometry boundary = geometry_at(metric, metric.r0());
  const RadialPotential potential = radial_capacity(metric, alpha);
  const RadialScan scan = imcf_trace(metric, t_max, steps);

  Artifacts a;
  a.base = mass_fn.stem().string() + ".symmetric";
  Json& j = a.result;
  j["metric"] = {{"kind", metric.kind_name()},
                 {"r0", num(metric.r0(), "r0")},
                 {"mass_at_r0", num(metric.mass(metric.r0()), "mass_at_r0")},
                 {"horizon", metric.is_horizon()},
                 {"schwarzschild_exterior", metric.is_schwarzschild()}};
  j["boundary"] = geometry_json(boundary);
  j["potential"] = {{"alpha", num(alpha, "alpha")},
                    {"coefficient", num(potential.capacity(), "coefficient")},
                    {"integral", num(potential.total_integral(), "integral")}};
  j["capacity"] = num(radial_capacity(metric).capacity(), "capacity");
  j["bray_miao"] = num(bray_miao_bound(boundary.area, boundary.willmore), "bray_miao");
  j["adm_mass"] = num(adm_mass(metric), "adm_mass");
  j["mass_bound"] = mass_bound_json(mass_bound_check(metric));
  j["scan"] = radial_scan_json(scan);

  a.files.push_back({a.base + "_scan.csv", FileFormat::Csv, radial_scan_csv(scan).text()});
  Series mh{"m_H", {}}, rs{"R", {}};
  for (const RadialSample& s : scan.samples) {
    mh.points.emplace_back(s.geometry.radius, s.geometry.hawking_mass);
    rs.points.emplace_back(s.geometry.radius, s.geometry.scalar_curvature);
  }
  const std::vector<Series> m_series{mh}, r_series{rs};
  a.files.push_back({a.base + ".svg", FileFormat::Svg,
                     svg_line_plot("Hawking mass of coordinate spheres", "r", "m_H", m_series)});
  a.files.push_back({a.base + "_scalar.svg", FileFormat::Svg,
                     svg_line_plot("Scalar curvature", "r", "R", r_series)});
  return a;
}

Artifacts corpus_artifacts(const std::filesystem::path& dir, bool bem, double tolerance,
                           const Json& config) {
  const std::vector<std::filesystem::path> files = corpus_files(dir);
  Artifacts a;
  a.base = "corpus";
  CsvTable csv({"name", "faces", "genus", "area", "willmore", "c_bem", "bray_miao", "gap_ratio",
                "szego", "lower_volume", "holds"});
  Json entries = Json::array();
  Series c_series{"C bem", {}}, bm_series{"bray-miao", {}};
  bool all_hold = true;
  int index = 0;

  for (const auto& path : files) {
    Json doc = envelope(Command::Corpus, config);
    doc["entry"] = path.filename().string();
    Json summary = {{"name", path.filename().string()}};
    try {
      const Artifacts entry = bounds_artifacts(path, bem, tolerance);
      doc["status"] = "ok";
      doc["result"] = entry.result;
      const Json& res = entry.result;
      const double bray_miao = res["upper_bounds"]["bray_miao"]["value"];
      CsvTable::Cell c_bem, gap, holds, szego;
      if (!res["upper_bounds"]["szego"]["value"].is_null()) {
        szego = res["upper_bounds"]["szego"]["value"].get<double>();
      }
      summary["status"] = "ok";
      summary["bray_miao"] = bray_miao;
      if (bem) {
        const double c = res["bem"]["capacity"];
        const bool ok = res["checks"]["bray_miao_holds"];
        c_bem = c;
        gap = (bray_miao - c) / c;
        holds = std::string(ok ? "true" : "false");
        all_hold = all_hold && ok;
        summary["c_bem"] = c;
        summary["gap_ratio"] = std::get<double>(gap);
        summary["holds"] = ok;
        c_series.points.emplace_back(index, c);
      }
      bm_series.points.emplace_back(index, bray_miao);
      csv.add_row({path.filename().string(), res["mesh"]["faces"].get<long long>(),
                   res["mesh"]["genus"].get<long long>(),
                   res["measures"]["area"].get<double>(), res["measures"]["willmore"].get<double>(),
                   c_bem, bray_miao, gap, szego,
                   res["lower_bounds"]["volume_radius"]["value"].get<double>(), holds});
    } catch (const Error& e) {
      doc["status"] = "error";
      doc["error"] = error_object(e);
      summary["status"] = "error";
      summary["error"] = error_object(e);
      a.status = std::max(a.status, static_cast<int>(e.kind()));
      csv.add_row({path.filename().string(), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}});
    }
    a.files.push_back({path.stem().string() + ".json", FileFormat::Json, dump_json(doc)});
    entries.push_back(summary);
    ++index;
  }

  a.result["directory_entries"] = files.size();
  a.result["with_bem"] = bem;
  if (bem) a.result["all_hold"] = all_hold;
  a.result["entries"] = entries;
  a.files.push_back({"corpus.csv", FileFormat::Csv, csv.text()});
  std::vector<Series> series;
  if (bem) series.push_back(c_series);
  series.push_back(bm_series);
  a.files.push_back({"corpus.svg", FileFormat::Svg,
                     svg_line_plot("Corpus: capacity vs Bray-Miao bound", "entry (sorted by name)",
                                   "capacity", series)});
  return a;
}

Artifacts generate_artifacts(const std::string& primitive, const std::filesystem::path& output) {
  const Primitive kind = parse_primitive(primitive);
  const TriMesh mesh = make_primitive(kind);
  save_mesh(mesh, output);
  Artifacts a;
  a.base = output.stem().string() + ".generate";
  a.result["primitive"] = primitive_spec(kind);
  a.result["mesh"] = mesh_json(output, mesh);
  return a;
}

}  // namespace capbound::report
