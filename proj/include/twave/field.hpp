#pragma once

#include <span>
#include <vector>

#include "twave/grid.hpp"

namespace twave {

/// Real periodic function represented by its nodal values on a Grid.
/// Values are fixed at construction; arithmetic returns new fields.
class RealPeriodicField {
 public:
  RealPeriodicField(Grid grid, std::vector<double> values);

  static RealPeriodicField zeros(const Grid& grid);
  static RealPeriodicField constant(const Grid& grid, double value);
  template <class F>
  static RealPeriodicField from_function(const Grid& grid, F&& f) {
    std::vector<double> v(grid.size());
    auto x = grid.nodes();
    for (int j = 0; j < grid.size(); ++j) v[j] = f(x[j]);
    return RealPeriodicField(grid, std::move(v));
  }

  const Grid& grid() const noexcept { return grid_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](int j) const { return values_[j]; }

  double sup_norm() const noexcept;
  double max() const noexcept;
  double min() const noexcept;
  /// Arithmetic mean of the nodal values (= (1/2l) * integral over a period).
  double mean() const noexcept;
  bool all_finite() const noexcept;

  /// Node values mirrored about x = 0, i.e. samples of f(-x).
  RealPeriodicField reflected() const;

  friend RealPeriodicField operator+(const RealPeriodicField& a, const RealPeriodicField& b);
  friend RealPeriodicField operator-(const RealPeriodicField& a, const RealPeriodicField& b);
  /// Pointwise (Hadamard) product.
  friend RealPeriodicField operator*(const RealPeriodicField& a, const RealPeriodicField& b);
  friend RealPeriodicField operator*(double s, const RealPeriodicField& a);
  friend RealPeriodicField operator*(const RealPeriodicField& a, double s) { return s * a; }
  friend RealPeriodicField operator+(const RealPeriodicField& a, double s);
  friend RealPeriodicField operator-(const RealPeriodicField& a, double s) { return a + (-s); }
  RealPeriodicField operator-() const { return -1.0 * *this; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// max_j |a_j - b_j|
double max_abs_diff(const RealPeriodicField& a, const RealPeriodicField& b);

}  // namespace twave
