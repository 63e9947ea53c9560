#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "capbound/error.hpp"
#include "capbound/level_set.hpp"
#include "capbound/report.hpp"
#include "capbound/symmetric.hpp"
#include "report/emit.hpp"

namespace capbound::report {

enum class FileFormat { Json, Csv, Svg };

struct OutputFile {
  std::string name;  ///< relative to the output directory
  FileFormat format;
  std::string text;
};

/// Result object of one command plus the side files it produces.
struct Artifacts {
  std::string base;  ///< stem of the main JSON file
  Json result;
  std::vector<OutputFile> files;
  /// Worst per-entry exit code for commands that keep going after a failure.
  int status = kExitOk;
};

/// Envelope shared by every JSON document: schema, tool, units, command, config.
Json envelope(Command command, const Json& config);
Json error_object(const Error& error);

Json measures_json(const SurfaceMeasures& m);
Json bound_report_json(const BoundReport& report, double tolerance);
Json radial_scan_json(const RadialScan& scan);
CsvTable radial_scan_csv(const RadialScan& scan);

Artifacts measure_artifacts(const std::filesystem::path& mesh_path);
Artifacts capacity_artifacts(const std::filesystem::path& mesh_path, double tolerance);
Artifacts bounds_artifacts(const std::filesystem::path& mesh_path, bool bem, double tolerance);
Artifacts schwarzschild_artifacts(double mass, double r0, double t_max, int steps);
Artifacts symmetric_artifacts(const std::filesystem::path& mass_fn, std::optional<double> r0,
                              double alpha, double t_max, int steps);
/// Per-entry documents reuse `config` in their envelopes.
Artifacts corpus_artifacts(const std::filesystem::path& dir, bool bem, double tolerance,
                           const Json& config);
Artifacts generate_artifacts(const std::string& primitive, const std::filesystem::path& output);

/// *.obj and *.ply files of a directory in byte-wise name order.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

}  // namespace capbound::report
