#include <cmath>
#include <sstream>

#include "capbound/bem.hpp"
#include "capbound/error.hpp"

namespace capbound {

namespace {

std::string raw_values(std::span<const double> h, std::span<const double> c) {
  std::ostringstream out;
  out.precision(12);
  for (std::size_t i = 0; i < h.size(); ++i) {
    out << (i ? ", " : "") << "(h=" << h[i] << ", C=" << c[i] << ")";
  }
  return out.str();
}

}  // namespace

RichardsonFit richardson_fit(std::span<const double> mesh_sizes,
                             std::span<const double> capacities) {
  if (mesh_sizes.size() != capacities.size()) {
    throw InputError("richardson fit needs one capacity per mesh size");
  }
  if (mesh_sizes.size() < 3) throw InputError("richardson fit needs at least 3 refinement levels");
  for (std::size_t i = 0; i < mesh_sizes.size(); ++i) {
    if (!(mesh_sizes[i] > 0.0)) throw InputError("mesh sizes must be positive");
    if (i > 0 && !(mesh_sizes[i] < mesh_sizes[i - 1])) {
      throw InputError("non-decreasing h: refinement levels must have strictly decreasing mesh size");
    }
  }

  RichardsonFit fit;
  fit.mesh_sizes.assign(mesh_sizes.begin(), mesh_sizes.end());
  fit.capacities.assign(capacities.begin(), capacities.end());

  const std::size_t n = mesh_sizes.size();
  for (std::size_t i = 2; i < n; ++i) {
    const double d1 = capacities[i - 2] - capacities[i - 1];
    const double d2 = capacities[i - 1] - capacities[i];
    if (!(d1 * d2 > 0.0)) {
      throw NumericalError("non-monotone C(h) sequence, no extrapolation: " +
                           raw_values(mesh_sizes, capacities));
    }
  }

  const double h1 = mesh_sizes[n - 3], h2 = mesh_sizes[n - 2], h3 = mesh_sizes[n - 1];
  const double c1 = capacities[n - 3], c2 = capacities[n - 2], c3 = capacities[n - 1];
  const double ratio = (c1 - c2) / (c2 - c3);
  auto model_ratio = [&](double p) {
    return (std::pow(h1, p) - std::pow(h2, p)) / (std::pow(h2, p) - std::pow(h3, p));
  };
  // model_ratio increases with p; bracket and bisect.
  double lo = 1e-6, hi = 50.0;
  if (!(ratio > model_ratio(lo) && ratio < model_ratio(hi))) {
    throw NumericalError("cannot fit a convergence order to C(h): " +
                         raw_values(mesh_sizes, capacities));
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (model_ratio(mid) < ratio ? lo : hi) = mid;
  }
  fit.order = 0.5 * (lo + hi);
  fit.coefficient = (c1 - c2) / (std::pow(h1, fit.order) - std::pow(h2, fit.order));
  fit.extrapolated = c3 - fit.coefficient * std::pow(h3, fit.order);
  if (!(fit.order > 0.5)) {
    std::ostringstream msg;
    msg << "observed convergence order " << fit.order << " <= 0.5, fit rejected: "
        << raw_values(mesh_sizes, capacities);
    throw NumericalError(msg.str());
  }
  return fit;
}

RichardsonFit refine_capacity(std::span<const TriMesh> meshes, double tolerance) {
  std::vector<double> h, c;
  for (const TriMesh& mesh : meshes) h.push_back(mesh.max_edge_length());
  // Validate the refinement order before paying for any solve.
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (!(h[i] < h[i - 1])) {
      throw InputError("non-decreasing h: refinement levels must have strictly decreasing mesh size");
    }
  }
  if (meshes.size() < 3) throw InputError("richardson fit needs at least 3 refinement levels");
  for (const TriMesh& mesh : meshes) c.push_back(solve_capacity(mesh, tolerance).capacity);
  return richardson_fit(h, c);
}

}  // namespace capbound
