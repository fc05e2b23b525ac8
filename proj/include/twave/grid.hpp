#pragma once

#include <memory>
#include <span>

namespace twave {

namespace detail {
struct GridData;
class FftPlan;
}  // namespace detail

/// Uniform periodic collocation grid on [-l, l) with N (even, >= 8) nodes
///   x_j = -l + j * 2l/N,  j = 0..N-1
/// and the matching discrete-transform wavenumber ladder k_m = m*pi/l stored
/// in transform order: m = 0, 1, ..., N/2 (Nyquist, positive), -N/2+1, ..., -1.
///
/// Grid is a cheap value handle; copies share the immutable node/wavenumber
/// tables and the transform plan.
class Grid {
 public:
  Grid(int n, double half_period);

  int size() const noexcept;
  double half_period() const noexcept;
  double spacing() const noexcept;
  double period() const noexcept { return 2.0 * half_period(); }

  std::span<const double> nodes() const noexcept;
  std::span<const double> wavenumbers() const noexcept;
  double node(int j) const { return nodes()[j]; }

  /// Wavenumber of half-spectrum index m in 0..N/2.
  double half_wavenumber(int m) const noexcept;
  /// Largest resolved |k| (the Nyquist wavenumber).
  double max_wavenumber() const noexcept;

  const detail::FftPlan& plan() const noexcept;

  friend bool operator==(const Grid& a, const Grid& b) noexcept;

 private:
  std::shared_ptr<const detail::GridData> data_;
};

Grid make_grid(int n, double half_period);

}  // namespace twave
