#include "report/emit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "capbound/error.hpp"

namespace capbound::report {

namespace {

std::string format_short(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 6);
  return std::string(buf.data(), res.ptr);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

double finite(double v, std::string_view field) {
  if (!std::isfinite(v)) {
    throw NumericalError("non-finite value in reported field '" + std::string(field) + "'");
  }
  return v;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw Error(ErrorKind::Numerical, "CSV row width mismatch");
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (const auto* v = std::get_if<double>(&row[k])) finite(*v, header_[k]);
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::text() const {
  std::string out;
  for (std::size_t k = 0; k < header_.size(); ++k) {
    out += (k ? "," : "") + csv_quote(header_[k]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      const Cell& cell = row[k];
      if (const auto* d = std::get_if<double>(&cell)) {
        out += format_double(finite(*d, header_[k]));
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        out += std::to_string(*i);
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        out += csv_quote(*s);
      }
    }
    out += '\n';
  }
  return out;
}

std::string svg_line_plot(std::string_view title, std::string_view x_label,
                          std::string_view y_label, std::span<const Series> series) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 70, kRight = 160, kTop = 40, kBottom = 50;
  static constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                         "#ff7f0e", "#9467bd", "#17becf"};

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_hi >= x_lo)) x_lo = 0, x_hi = 1;
  if (!(y_hi >= y_lo)) y_lo = 0, y_hi = 1;
  const double y_pad = y_hi > y_lo ? 0.05 * (y_hi - y_lo) : std::max(0.5, 0.05 * std::abs(y_hi));
  y_lo -= y_pad, y_hi += y_pad;
  if (x_hi == x_lo) x_lo -= 0.5, x_hi += 0.5;

  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + xml_escape(title) + "</text>\n";
  out += "<rect x=\"" + format_short(kLeft) + "\" y=\"" + format_short(kTop) + "\" width=\"" +
         format_short(plot_w) + "\" height=\"" + format_short(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x_lo + (x_hi - x_lo) * k / 4.0;
    const double yv = y_lo + (y_hi - y_lo) * k / 4.0;
    out += "<text x=\"" + format_short(px(xv)) + "\" y=\"" + format_short(kTop + plot_h + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_short(xv) + "</text>\n";
    out += "<text x=\"" + format_short(kLeft - 6) + "\" y=\"" + format_short(py(yv) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_short(yv) + "</text>\n";
    out += "<line x1=\"" + format_short(kLeft) + "\" y1=\"" + format_short(py(yv)) + "\" x2=\"" +
           format_short(kLeft + plot_w) + "\" y2=\"" + format_short(py(yv)) +
           "\" stroke=\"#dddddd\"/>\n";
  }
  out += "<text x=\"" + format_short(kLeft + plot_w / 2) + "\" y=\"" + format_short(kHeight - 10) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         xml_escape(x_label) + "</text>\n";
  out += "<text x=\"16\" y=\"" + format_short(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " + format_short(kTop + plot_h / 2) + ")\">" +
         xml_escape(y_label) + "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kColors[k % kColors.size()];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : series[k].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      out += (first ? "" : " ") + format_short(px(x)) + "," + format_short(py(y));
      first = false;
    }
    out += "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(k);
    out += "<line x1=\"" + format_short(kWidth - kRight + 10) + "\" y1=\"" + format_short(ly - 4) +
           "\" x2=\"" + format_short(kWidth - kRight + 30) + "\" y2=\"" + format_short(ly - 4) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + format_short(kWidth - kRight + 36) + "\" y=\"" + format_short(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(series[k].name) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace capbound::report
