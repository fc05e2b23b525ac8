#include "twave/field.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "twave/errors.hpp"

namespace twave {

namespace {
void require_same_grid(const RealPeriodicField& a, const RealPeriodicField& b) {
  if (!(a.grid() == b.grid())) throw ParameterError("fields live on different grids");
}

template <class Op>
RealPeriodicField zip(const RealPeriodicField& a, const RealPeriodicField& b, Op op) {
  require_same_grid(a, b);
  std::vector<double> v(a.size());
  for (int j = 0; j < a.size(); ++j) v[j] = op(a[j], b[j]);
  return RealPeriodicField(a.grid(), std::move(v));
}
}  // namespace

RealPeriodicField::RealPeriodicField(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size())
    throw ParameterError("field has " + std::to_string(values_.size()) + " values, grid has " +
                         std::to_string(grid_.size()) + " nodes");
}

RealPeriodicField RealPeriodicField::zeros(const Grid& grid) { return constant(grid, 0.0); }

RealPeriodicField RealPeriodicField::constant(const Grid& grid, double value) {
  return RealPeriodicField(grid, std::vector<double>(grid.size(), value));
}

double RealPeriodicField::sup_norm() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double RealPeriodicField::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }
double RealPeriodicField::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }

double RealPeriodicField::mean() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / size();
}

bool RealPeriodicField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

RealPeriodicField RealPeriodicField::reflected() const {
  // x_j = -l + j dx, so -x_j = x_{N-j} (with x_N == x_0)
  const int n = size();
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = values_[(n - j) % n];
  return RealPeriodicField(grid_, std::move(v));
}

RealPeriodicField operator+(const RealPeriodicField& a, const RealPeriodicField& b) {
  return zip(a, b, std::plus<>{});
}
RealPeriodicField operator-(const RealPeriodicField& a, const RealPeriodicField& b) {
  return zip(a, b, std::minus<>{});
}
RealPeriodicField operator*(const RealPeriodicField& a, const RealPeriodicField& b) {
  return zip(a, b, std::multiplies<>{});
}
RealPeriodicField operator*(double s, const RealPeriodicField& a) {
  std::vector<double> v(a.values().begin(), a.values().end());
  for (double& x : v) x *= s;
  return RealPeriodicField(a.grid(), std::move(v));
}
RealPeriodicField operator+(const RealPeriodicField& a, double s) {
  std::vector<double> v(a.values().begin(), a.values().end());
  for (double& x : v) x += s;
  return RealPeriodicField(a.grid(), std::move(v));
}

double max_abs_diff(const RealPeriodicField& a, const RealPeriodicField& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace twave
