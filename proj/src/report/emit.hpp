#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace capbound::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "capbound/1";
inline constexpr std::string_view kUnits = "geometric units (G = c = 1); lengths in mesh units";

/// Returns v, or throws NumericalError naming `field` when v is NaN or infinite.
double finite(double v, std::string_view field);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// Two-space indented JSON with a trailing newline.
std::string dump_json(const Json& doc);

/// CSV with a fixed header; every row must match its width.
class CsvTable {
 public:
  using Cell = std::variant<std::monostate, double, long long, std::string>;

  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<Cell> row);
  std::size_t size() const { return rows_.size(); }
  std::string text() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Static SVG line plot (svg, rect, line, polyline and text elements only).
std::string svg_line_plot(std::string_view title, std::string_view x_label,
                          std::string_view y_label, std::span<const Series> series);

/// Writes the whole file or throws InputError.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace capbound::report
