#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capbound {

enum class Command { Measure, Capacity, Bounds, Schwarzschild, Symmetric, Corpus, Generate };

Command parse_command(std::string_view name);
std::string_view command_name(Command command);

struct EmitFlags {
  bool json = true;
  bool csv = true;
  bool svg = true;

  bool any() const { return json || csv || svg; }
};

/// Comma-separated subset of {json, csv, svg}; the empty string selects nothing.
EmitFlags parse_emit(std::string_view list);

/// One CLI invocation. Unset optionals take per-command defaults.
struct RunConfig {
  Command command = Command::Measure;
  /// Mesh files (measure, capacity, bounds), a directory (corpus) or the
  /// output mesh path (generate).
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out_dir = ".";
  EmitFlags emit;

  bool bem = false;
  /// Collocation residual tolerance in (0, 1e-2]; default 1e-6 for capacity
  /// and 1e-2 for bounds and corpus, where it is also the relative BEM error allowance.
  std::optional<double> tolerance;

  std::optional<double> mass;
  std::optional<double> r0;
  std::optional<std::filesystem::path> mass_fn;
  double alpha = 0.0;
  double t_max = 8.0;
  int steps = 65;

  /// Primitive spec for generate, e.g. "sphere:1:4".
  std::string primitive;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumerical = 2;

/// Executes the command, writes the selected artifacts into out_dir and the
/// JSON report (or error object) to `out`. Never throws.
int run(const RunConfig& config, std::ostream& out);

}  // namespace capbound
