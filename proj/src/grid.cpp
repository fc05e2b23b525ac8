#include "twave/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fft.hpp"
#include "twave/errors.hpp"

namespace twave {

namespace detail {
struct GridData {
  int n;
  double l;
  std::vector<double> nodes;
  std::vector<double> wavenumbers;
  FftPlan plan;

  GridData(int n_, double l_) : n(n_), l(l_), nodes(n_), wavenumbers(n_), plan(n_) {
    const double dx = 2.0 * l / n;
    const double k0 = std::numbers::pi / l;
    for (int j = 0; j < n; ++j) {
      nodes[j] = -l + j * dx;
      const int m = (j <= n / 2) ? j : j - n;
      wavenumbers[j] = m * k0;
    }
  }
};
}  // namespace detail

Grid::Grid(int n, double half_period) {
  if (n % 2 != 0) throw ParameterError("N must be even (got " + std::to_string(n) + ")");
  if (n < 8) throw ParameterError("N must be at least 8 (got " + std::to_string(n) + ")");
  if (!(half_period > 0.0) || !std::isfinite(half_period))
    throw ParameterError("half-period l must be positive and finite");
  data_ = std::make_shared<const detail::GridData>(n, half_period);
}

int Grid::size() const noexcept { return data_->n; }
double Grid::half_period() const noexcept { return data_->l; }
double Grid::spacing() const noexcept { return 2.0 * data_->l / data_->n; }
std::span<const double> Grid::nodes() const noexcept { return data_->nodes; }
std::span<const double> Grid::wavenumbers() const noexcept { return data_->wavenumbers; }
double Grid::half_wavenumber(int m) const noexcept { return m * std::numbers::pi / data_->l; }
double Grid::max_wavenumber() const noexcept { return half_wavenumber(data_->n / 2); }
const detail::FftPlan& Grid::plan() const noexcept { return data_->plan; }

bool operator==(const Grid& a, const Grid& b) noexcept {
  return a.data_ == b.data_ || (a.size() == b.size() && a.half_period() == b.half_period());
}

Grid make_grid(int n, double half_period) { return Grid(n, half_period); }

}  // namespace twave
