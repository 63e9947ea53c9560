#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "capbound/error.hpp"
#include "capbound/mesh.hpp"
#include "capbound/symmetric.hpp"

namespace capbound {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHorizonTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_field(const std::string& field, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError("mass function CSV line " + std::to_string(line) + ": bad number '" + field +
                     "'");
  }
  return value;
}

}  // namespace

SymmetricMetric::SymmetricMetric(double r0, MassFunction fn) : r0_(r0), mass_fn_(std::move(fn)) {
  validate();
}

SymmetricMetric SymmetricMetric::flat(double r0) { return SymmetricMetric(r0, Flat{}); }

SymmetricMetric SymmetricMetric::schwarzschild(double mass, double r0) {
  return SymmetricMetric(r0, Schwarzschild{mass});
}

SymmetricMetric SymmetricMetric::tabulated(std::vector<double> r, std::vector<double> m,
                                           double r0) {
  MonotoneSpline spline(std::move(r), std::move(m));
  const double start = std::isnan(r0) ? spline.knots().front() : r0;
  return SymmetricMetric(start, std::move(spline));
}

std::string SymmetricMetric::kind_name() const {
  return std::visit(Overloaded{[](const Flat&) { return std::string("flat"); },
                               [](const Schwarzschild&) { return std::string("schwarzschild"); },
                               [](const Tabulated&) { return std::string("tabulated"); }},
                    mass_fn_);
}

void SymmetricMetric::validate() const {
  if (!(r0_ > 0.0) || !std::isfinite(r0_)) throw InputError("metric needs r0 > 0");
  if (const auto* tab = std::get_if<Tabulated>(&mass_fn_)) {
    if (r0_ < tab->knots().front() || r0_ > tab->knots().back()) {
      throw InputError("r0 lies outside the tabulated radii");
    }
  }
  auto fail = [](double r, double m) {
    std::ostringstream msg;
    msg << "metric undefined: 2 m(r) >= r at r = " << r << " (m = " << m << ")";
    throw InputError(msg.str());
  };
  const double boundary_gap = r0_ - 2.0 * mass(r0_);
  if (boundary_gap < -kHorizonTolerance * r0_) fail(r0_, mass(r0_));

  // Beyond r0 the inequality must be strict. Check knots and a dense set of
  // points per spline interval, then the constant-mass tail (where r - 2m grows).
  std::vector<double> probes;
  if (const auto* tab = std::get_if<Tabulated>(&mass_fn_)) {
    const auto x = tab->knots();
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      for (int j = 0; j <= 32; ++j) {
        const double r = x[k] + (x[k + 1] - x[k]) * j / 32.0;
        if (r > r0_) probes.push_back(r);
      }
    }
    probes.push_back(std::max(r0_, x.back()) * (1.0 + 1e-9));
  } else {
    probes.push_back(r0_ * (1.0 + 1e-9));
  }
  for (double r : probes) {
    if (!(r - 2.0 * mass(r) > 0.0)) fail(r, mass(r));
  }
}

double SymmetricMetric::mass(double r) const {
  return std::visit(Overloaded{[](const Flat&) { return 0.0; },
                               [](const Schwarzschild& s) { return s.mass; },
                               [r](const Tabulated& t) { return t.value(r); }},
                    mass_fn_);
}

double SymmetricMetric::mass_derivative(double r) const {
  if (const auto* tab = std::get_if<Tabulated>(&mass_fn_)) return tab->derivative(r);
  return 0.0;
}

double SymmetricMetric::lapse_squared(double r) const {
  const double value = (r - 2.0 * mass(r)) / r;
  // A horizon boundary may sit a rounding error below zero.
  if (value < 0.0 && value > -kHorizonTolerance && std::abs(r - r0_) <= kHorizonTolerance * r0_) {
    return 0.0;
  }
  return value;
}

bool SymmetricMetric::is_schwarzschild() const {
  if (const auto* tab = std::get_if<Tabulated>(&mass_fn_)) {
    const double m0 = mass(r0_);
    for (double r : knots_beyond_r0()) {
      if (std::abs(tab->value(r) - m0) > 1e-12 * std::max(1.0, std::abs(m0))) return false;
    }
  }
  return true;
}

bool SymmetricMetric::is_horizon() const { return lapse_squared(r0_) <= kHorizonTolerance; }

std::vector<double> SymmetricMetric::knots_beyond_r0() const {
  std::vector<double> out;
  if (const auto* tab = std::get_if<Tabulated>(&mass_fn_)) {
    for (double r : tab->knots()) {
      if (r > r0_) out.push_back(r);
    }
  }
  return out;
}

SymmetricMetric parse_mass_function_csv(std::string_view text, double r0) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<double> r, m;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string row = trim(line);
    if (row.empty() || row[0] == '#') continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw InputError("mass function CSV line " + std::to_string(lineno) + ": expected 'r,m'");
    }
    const std::string a = trim(row.substr(0, comma));
    const std::string b = trim(row.substr(comma + 1));
    if (!header) {
      if (a != "r" || b != "m") throw InputError("mass function CSV must start with header 'r,m'");
      header = true;
      continue;
    }
    r.push_back(parse_field(a, lineno));
    m.push_back(parse_field(b, lineno));
    if (r.size() > 1 && !(r.back() > r[r.size() - 2])) {
      throw InputError("mass function CSV line " + std::to_string(lineno) +
                       ": r must be strictly increasing");
    }
  }
  if (!header) throw InputError("mass function CSV must start with header 'r,m'");
  return SymmetricMetric::tabulated(std::move(r), std::move(m), r0);
}

SymmetricMetric load_mass_function_csv(const std::filesystem::path& path, double r0) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open mass function CSV '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mass_function_csv(buf.str(), r0);
}

SphereGeometry geometry_at(const SymmetricMetric& metric, double r) {
  if (!(r >= metric.r0() * (1.0 - 1e-14))) {
    std::ostringstream msg;
    msg << "radius " << r << " lies inside the boundary r0 = " << metric.r0();
    throw InputError(msg.str());
  }
  const double lapse2 = metric.lapse_squared(r);
  if (lapse2 < 0.0) {
    std::ostringstream msg;
    msg << "metric undefined at r = " << r << ": 2 m(r) > r";
    throw InputError(msg.str());
  }
  SphereGeometry g;
  g.radius = r;
  g.area = 4.0 * kPi * r * r;
  g.mean_curvature = 2.0 / r * std::sqrt(lapse2);
  g.willmore = g.mean_curvature * g.mean_curvature * g.area;
  g.hawking_mass = hawking_mass(g.area, g.willmore);
  g.scalar_curvature = 4.0 * metric.mass_derivative(r) / (r * r);
  return g;
}

double adm_mass(const SymmetricMetric& metric) {
  double tail = metric.r0();
  for (double r : metric.knots_beyond_r0()) tail = std::max(tail, r);
  // Beyond the last knot m is constant, so the quasi-local expression is
  // already at its limit; the flux form converges like m (1 + 2m / r).
  const double scale = std::max({tail, 2.0 * std::abs(metric.mass(tail)), 1.0});
  const double r_near = 1e3 * scale;
  const double limit = 0.5 * r_near * (1.0 - metric.lapse_squared(r_near));
  const double r_far = 1e9 * scale;
  // A - 1 = (2m/r) / (1 - 2m/r); forming it from A itself cancels to ~1e-6 here.
  const double q = 2.0 * metric.mass(r_far) / r_far;
  const double flux = 0.5 * r_far * q / (1.0 - q);
  if (std::abs(flux - limit) > 1e-6 * std::max(1.0, std::abs(limit))) {
    std::ostringstream msg;
    msg << "ADM mass limit " << limit << " disagrees with flux integral " << flux;
    throw NumericalError(msg.str());
  }
  return limit;
}

RadialScan imcf_trace(const SymmetricMetric& metric, double t_max, int steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InputError("imcf trace needs t_max > 0");
  if (steps < 2) throw InputError("imcf trace needs steps >= 2");
  const double r0 = metric.r0();
  const double r_end = r0 * std::exp(0.5 * t_max);

  std::vector<double> times;
  for (int k = 0; k < steps; ++k) times.push_back(t_max * k / (steps - 1));
  const std::vector<double> knots = metric.knots_beyond_r0();
  double prev = r0;
  for (double knot : knots) {
    const double hi = std::min(knot, r_end);
    if (hi > prev) times.push_back(2.0 * std::log(0.5 * (prev + hi) / r0));
    if (knot < r_end) times.push_back(2.0 * std::log(knot / r0));
    prev = knot;
    if (knot >= r_end) break;
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-14; }),
              times.end());

  RadialScan scan;
  const double area0 = 4.0 * kPi * r0 * r0;
  for (double t : times) {
    RadialSample s{t, geometry_at(metric, r0 * std::exp(0.5 * t))};
    if (std::abs(s.geometry.area - std::exp(t) * area0) > 1e-12 * s.geometry.area) {
      throw NumericalError("imcf trace violated the area law |S_t| = e^t |S_0|");
    }
    scan.samples.push_back(s);
  }

  double mass_scale = r_end, curvature_scale = 1.0 / (r0 * r0);
  for (const RadialSample& s : scan.samples) {
    mass_scale = std::max(mass_scale, std::abs(s.geometry.hawking_mass));
    curvature_scale = std::max(curvature_scale, std::abs(s.geometry.scalar_curvature));
  }
  const double mass_slack = 1e-12 * mass_scale;
  const double curvature_slack = 1e-12 * curvature_scale;
  for (std::size_t k = 0; k < scan.samples.size(); ++k) {
    const SphereGeometry& g = scan.samples[k].geometry;
    if (g.scalar_curvature < -curvature_slack) {
      scan.scalar_nonnegative = false;
      scan.negative_scalar_radii.push_back(g.radius);
    }
    if (k + 1 < scan.samples.size()) {
      const SphereGeometry& next = scan.samples[k + 1].geometry;
      if (next.hawking_mass < g.hawking_mass - mass_slack) {
        scan.hawking_monotone = false;
        scan.hawking_decreasing.emplace_back(g.radius, next.radius);
      }
    }
  }
  return scan;
}

MassBoundCheck mass_bound_check(const SymmetricMetric& metric) {
  MassBoundCheck out;
  const SphereGeometry boundary = geometry_at(metric, metric.r0());
  out.boundary_hawking_mass = boundary.hawking_mass;
  out.mass = adm_mass(metric);
  out.alpha = std::sqrt(metric.lapse_squared(metric.r0()));
  const double alpha_from_willmore = std::sqrt(boundary.willmore / (16.0 * kPi));
  if (std::abs(out.alpha - alpha_from_willmore) > 1e-12 * std::max(1.0, out.alpha)) {
    throw NumericalError("boundary alpha from A(r0) disagrees with the Willmore form");
  }
  out.capacity = radial_capacity(metric, 0.0).capacity();
  out.scaled_capacity = (1.0 - out.alpha) * out.capacity;
  if (out.alpha < 1.0) {
    const double direct = radial_capacity(metric, out.alpha).capacity();
    if (std::abs(direct - out.scaled_capacity) > 1e-10 * std::max(1.0, direct)) {
      throw NumericalError("alpha-potential coefficient disagrees with (1 - alpha) C_M");
    }
  }
  out.hypothesis_ok = out.boundary_hawking_mass >= -1e-12 * metric.r0();
  if (out.hypothesis_ok) {
    out.holds = out.mass >= out.scaled_capacity - 1e-9;
    out.equality = metric.is_schwarzschild() && std::abs(out.mass - out.scaled_capacity) < 1e-9;
  }
  return out;
}

StaticCheck static_check(double mass, double r0) {
  if (!(mass >= 0.0)) throw InputError("static check needs m >= 0");
  const SymmetricMetric metric = SymmetricMetric::schwarzschild(mass, r0);
  const SphereGeometry boundary = geometry_at(metric, r0);
  // N = sqrt(1 - 2m / r) increases with r, so its minimum over the exterior is on the boundary.
  const double lapse = std::sqrt(metric.lapse_squared(r0));
  StaticCheck out;
  out.min_lapse_squared = lapse * lapse;
  out.willmore_term = boundary.willmore / (16.0 * kPi);
  out.equality = std::abs(out.min_lapse_squared - out.willmore_term) <= 1e-12;
  return out;
}

}  // namespace capbound
