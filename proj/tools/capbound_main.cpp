#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "capbound/capbound.h"

namespace {

constexpr const char* kDescription =
    "Capacity bounds for closed surfaces and rotationally symmetric metrics.\n"
    "Units are geometric (G = c = 1); mesh lengths are taken as given.\n"
    "Exit codes: 0 success, 1 input error, 2 numerical failure.\n"
    "CAPBOUND_THREADS caps the number of worker threads.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{kDescription, "capbound"};
  app.set_version_flag("--version", std::string(capbound_version()));

  std::string command;
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::string emit = "json,csv,svg";
  bool bem = false;
  double tol = std::numeric_limits<double>::quiet_NaN();
  double mass = std::numeric_limits<double>::quiet_NaN();
  double r0 = std::numeric_limits<double>::quiet_NaN();
  std::string mass_fn;
  double alpha = 0.0;
  double t_max = 8.0;
  int steps = 65;
  std::string primitive;

  app.add_option("command", command,
                 "measure | capacity | bounds | schwarzschild | symmetric | corpus | generate")
      ->required()
      ->check(CLI::IsMember({"measure", "capacity", "bounds", "schwarzschild", "symmetric",
                             "corpus", "generate"}));
  app.add_option("inputs", inputs,
                 "mesh file (.obj/.ply), corpus directory, or output mesh for generate");
  app.add_flag("--bem", bem, "solve the flat-space capacity with the boundary element method");
  app.add_option("--tol", tol,
                 "BEM residual tolerance in (0, 1e-2]; also the relative error allowance "
                 "(default 1e-6 for capacity, 1e-2 otherwise)");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--emit", emit, "comma list of json, csv, svg; empty writes no files")
      ->capture_default_str();
  app.add_option("--m", mass, "Schwarzschild mass (length)");
  app.add_option("--r0", r0, "inner boundary radius (length)");
  app.add_option("--mass-fn", mass_fn, "mass function CSV with header r,m (lengths)");
  app.add_option("--alpha", alpha, "boundary value of the radial potential, in [0, 1)")
      ->capture_default_str();
  app.add_option("--tmax", t_max, "final inverse mean curvature flow time")->capture_default_str();
  app.add_option("--steps", steps, "uniform flow-time samples")->capture_default_str();
  app.add_option("--primitive", primitive,
                 "generator spec: sphere:r:n, spheroid:a:b:n, box:lx:ly:lz:rounding:n, torus:R:r:n");

  // CLI11 reads "--emit=" as a missing value and would consume the next token.
  std::vector<std::string> args;
  for (int k = argc - 1; k >= 1; --k) {
    if (std::string(argv[k]) == "--emit=") {
      args.emplace_back("");
      args.emplace_back("--emit");
    } else {
      args.emplace_back(argv[k]);
    }
  }

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : CAPBOUND_INPUT_ERROR;
  }

  std::vector<const char*> input_ptrs;
  for (const auto& s : inputs) input_ptrs.push_back(s.c_str());

  capbound_run_config config;
  capbound_run_config_init(&config);
  config.command = command.c_str();
  config.inputs = input_ptrs.data();
  config.input_count = input_ptrs.size();
  config.out_dir = out_dir.c_str();
  config.emit = emit.c_str();
  config.bem = bem ? 1 : 0;
  config.tolerance = tol;
  config.mass = mass;
  config.r0 = r0;
  config.mass_fn = mass_fn.empty() ? nullptr : mass_fn.c_str();
  config.alpha = alpha;
  config.t_max = t_max;
  config.steps = steps;
  config.primitive = primitive.empty() ? nullptr : primitive.c_str();
  return capbound_run(&config);
}
