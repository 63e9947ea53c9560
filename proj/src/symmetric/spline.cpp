#include <algorithm>
#include <cmath>

#include "capbound/error.hpp"
#include "capbound/symmetric.hpp"

namespace capbound {

MonotoneSpline::MonotoneSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw InputError("spline needs at least two (x, y) samples");
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(x_[k]) || !std::isfinite(y_[k])) throw InputError("non-finite spline sample");
    if (k > 0 && !(x_[k] > x_[k - 1])) throw InputError("spline knots must be strictly increasing");
  }

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    delta[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  slope_.assign(n, 0.0);
  if (n == 2) {
    slope_[0] = slope_[1] = delta[0];
    return;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;  // local extremum or flat: zero slope
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    slope_[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  // One-sided three-point end slopes, limited to keep the end intervals monotone.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (d * d0 <= 0.0) return 0.0;
    if (d0 * d1 <= 0.0 && std::abs(d) > 3.0 * std::abs(d0)) d = 3.0 * d0;
    return d;
  };
  slope_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  slope_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

std::size_t MonotoneSpline::interval(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - x_.begin());
  return std::clamp<std::size_t>(k, 1, x_.size() - 1) - 1;
}

double MonotoneSpline::value(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const std::size_t k = interval(x);
  const double h = x_[k + 1] - x_[k];
  const double s = (x - x_[k]) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y_[k] + (s3 - 2 * s2 + s) * h * slope_[k] +
         (-2 * s3 + 3 * s2) * y_[k + 1] + (s3 - s2) * h * slope_[k + 1];
}

double MonotoneSpline::derivative(double x) const {
  if (x < x_.front() || x >= x_.back()) return 0.0;
  const std::size_t k = interval(x);
  const double h = x_[k + 1] - x_[k];
  const double s = (x - x_[k]) / h;
  const double s2 = s * s;
  return (6 * s2 - 6 * s) * y_[k] / h + (3 * s2 - 4 * s + 1) * slope_[k] +
         (-6 * s2 + 6 * s) * y_[k + 1] / h + (3 * s2 - 2 * s) * slope_[k + 1];
}

}  // namespace capbound
