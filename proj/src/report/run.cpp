#include <array>
#include <cmath>
#include <ostream>

#include "capbound/error.hpp"
#include "capbound/report.hpp"
#include "report/reports.hpp"

namespace capbound {

namespace {

using report::Artifacts;
using report::FileFormat;
using report::Json;

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands = {{
    {Command::Measure, "measure"},
    {Command::Capacity, "capacity"},
    {Command::Bounds, "bounds"},
    {Command::Schwarzschild, "schwarzschild"},
    {Command::Symmetric, "symmetric"},
    {Command::Corpus, "corpus"},
    {Command::Generate, "generate"},
}};

double default_tolerance(Command c) { return c == Command::Capacity ? 1e-6 : 1e-2; }

// The output directory is left out so that runs into different directories
// produce identical documents.
Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = command_name(c.command);
  Json inputs = Json::array();
  for (const auto& p : c.inputs) inputs.push_back(p.generic_string());
  j["inputs"] = inputs;
  Json emit = Json::array();
  if (c.emit.json) emit.push_back("json");
  if (c.emit.csv) emit.push_back("csv");
  if (c.emit.svg) emit.push_back("svg");
  j["emit"] = emit;
  switch (c.command) {
    case Command::Measure:
      break;
    case Command::Capacity:
      j["tolerance"] = c.tolerance.value_or(default_tolerance(c.command));
      break;
    case Command::Bounds:
    case Command::Corpus:
      j["bem"] = c.bem;
      j["tolerance"] = c.tolerance.value_or(default_tolerance(c.command));
      break;
    case Command::Schwarzschild:
      j["m"] = c.mass ? Json(*c.mass) : Json(nullptr);
      j["r0"] = c.r0 ? Json(*c.r0) : Json(nullptr);
      j["t_max"] = c.t_max;
      j["steps"] = c.steps;
      break;
    case Command::Symmetric:
      j["mass_fn"] = c.mass_fn ? Json(c.mass_fn->generic_string()) : Json(nullptr);
      j["r0"] = c.r0 ? Json(*c.r0) : Json(nullptr);
      j["alpha"] = c.alpha;
      j["t_max"] = c.t_max;
      j["steps"] = c.steps;
      break;
    case Command::Generate:
      j["primitive"] = c.primitive;
      break;
  }
  return j;
}

std::string base_name(const RunConfig& c) {
  switch (c.command) {
    case Command::Schwarzschild:
    case Command::Corpus:
      return std::string(command_name(c.command));
    case Command::Symmetric:
      return (c.mass_fn ? c.mass_fn->stem().string() : std::string("metric")) + ".symmetric";
    default:
      return (c.inputs.empty() ? std::string("mesh") : c.inputs.front().stem().string()) + "." +
             std::string(command_name(c.command));
  }
}

const std::filesystem::path& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) {
    throw InputError(std::string(command_name(c.command)) + " expects exactly one input path");
  }
  return c.inputs.front();
}

Artifacts dispatch(const RunConfig& c) {
  const double tol = c.tolerance.value_or(default_tolerance(c.command));
  if (!(tol > 0.0 && tol <= 1e-2)) throw InputError("--tol must lie in (0, 1e-2]");
  switch (c.command) {
    case Command::Measure:
      return report::measure_artifacts(single_input(c));
    case Command::Capacity:
      return report::capacity_artifacts(single_input(c), tol);
    case Command::Bounds:
      return report::bounds_artifacts(single_input(c), c.bem, tol);
    case Command::Schwarzschild:
      if (!c.mass || !c.r0) throw InputError("schwarzschild needs --m and --r0");
      return report::schwarzschild_artifacts(*c.mass, *c.r0, c.t_max, c.steps);
    case Command::Symmetric:
      if (!c.mass_fn) throw InputError("symmetric needs --mass-fn");
      return report::symmetric_artifacts(*c.mass_fn, c.r0, c.alpha, c.t_max, c.steps);
    case Command::Corpus:
      return report::corpus_artifacts(single_input(c), c.bem, tol, config_json(c));
    case Command::Generate:
      if (c.primitive.empty()) throw InputError("generate needs --primitive");
      return report::generate_artifacts(c.primitive, single_input(c));
  }
  throw InputError("unknown command");
}

bool selected(const EmitFlags& emit, FileFormat f) {
  switch (f) {
    case FileFormat::Json: return emit.json;
    case FileFormat::Csv: return emit.csv;
    case FileFormat::Svg: return emit.svg;
  }
  return false;
}

void prepare_out_dir(const RunConfig& c) {
  if (!c.emit.any()) return;
  std::error_code ec;
  std::filesystem::create_directories(c.out_dir, ec);
  if (ec || !std::filesystem::is_directory(c.out_dir)) {
    throw InputError("cannot create output directory '" + c.out_dir.string() + "'");
  }
}

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& [cmd, text] : kCommands) {
    if (text == name) return cmd;
  }
  throw InputError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) {
  for (const auto& [cmd, text] : kCommands) {
    if (cmd == command) return text;
  }
  return "unknown";
}

EmitFlags parse_emit(std::string_view list) {
  EmitFlags flags{false, false, false};
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    if (item == "json") flags.json = true;
    else if (item == "csv") flags.csv = true;
    else if (item == "svg") flags.svg = true;
    else if (!item.empty()) throw InputError("unknown emit format '" + std::string(item) + "'");
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return flags;
}

int run(const RunConfig& config, std::ostream& out) {
  Json doc = report::envelope(config.command, config_json(config));
  const std::string base = base_name(config);
  int code = kExitOk;
  try {
    prepare_out_dir(config);
    const Artifacts a = dispatch(config);
    doc["status"] = a.status == kExitOk ? "ok" : "partial";
    doc["result"] = a.result;
    const std::string text = report::dump_json(doc);
    for (const report::OutputFile& f : a.files) {
      if (selected(config.emit, f.format)) report::write_text_file(config.out_dir / f.name, f.text);
    }
    if (config.emit.json) report::write_text_file(config.out_dir / (a.base + ".json"), text);
    out << text;
    return a.status;
  } catch (const Error& e) {
    code = static_cast<int>(e.kind());
    doc["status"] = "error";
    doc["error"] = report::error_object(e);
  } catch (const std::exception& e) {
    code = kExitNumerical;
    doc["status"] = "error";
    doc["error"] = {{"code", kExitNumerical}, {"kind", "internal"}, {"message", e.what()}};
  }
  doc.erase("result");
  const std::string text = report::dump_json(doc);
  if (config.emit.json) {
    try {
      if (std::filesystem::is_directory(config.out_dir)) {
        report::write_text_file(config.out_dir / (base + ".json"), text);
      }
    } catch (const std::exception&) {
      // The error object still reaches `out`.
    }
  }
  out << text;
  return code;
}

}  // namespace capbound
