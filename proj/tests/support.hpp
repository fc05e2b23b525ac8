#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "twave/field.hpp"

namespace twave::testing {

/// sum_{k=1}^{kmax} a_k cos(k x) + b_k sin(k x) + a_0 on a grid with l = pi,
/// coefficients uniform in [-1, 1] scaled by 1/k^2.
inline RealPeriodicField random_band_limited(const Grid& grid, int kmax, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(kmax + 1), b(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    const double s = k == 0 ? 1.0 : 1.0 / (k * k);
    a[k] = s * u(rng);
    b[k] = s * u(rng);
  }
  const double w = std::numbers::pi / grid.half_period();
  return RealPeriodicField::from_function(grid, [&](double x) {
    double v = a[0];
    for (int k = 1; k <= kmax; ++k) v += a[k] * std::cos(k * w * x) + b[k] * std::sin(k * w * x);
    return v;
  });
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1 - z * z) * dp * dp);
  }
  return {x, w};
}

/// Composite Gauss-Legendre rule on [a, b].
template <class F>
double integrate(F&& f, double a, double b, int panels = 64, int order = 16) {
  static const auto gl = gauss_legendre(order);
  const double h = (b - a) / panels;
  double s = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < order; ++i) s += gl.second[i] * f(mid + 0.5 * h * gl.first[i]);
  }
  return 0.5 * h * s;
}

/// Trigonometric interpolant of nodal data by a direct O(N) sum per point.
class NaiveInterpolant {
 public:
  explicit NaiveInterpolant(const RealPeriodicField& f) : l_(f.grid().half_period()) {
    const int n = f.size();
    re_.assign(n / 2 + 1, 0.0);
    im_.assign(n / 2 + 1, 0.0);
    for (int m = 0; m <= n / 2; ++m) {
      for (int j = 0; j < n; ++j) {
        const double th = m * std::numbers::pi / l_ * f.grid().node(j);
        re_[m] += f[j] * std::cos(th);
        im_[m] += f[j] * std::sin(th);
      }
      const double scale = (m == 0 || m == n / 2) ? 1.0 / n : 2.0 / n;
      re_[m] *= scale;
      im_[m] *= scale;
    }
  }
  double operator()(double x) const {
    double v = 0;
    for (std::size_t m = 0; m < re_.size(); ++m) {
      const double th = m * std::numbers::pi / l_ * x;
      v += re_[m] * std::cos(th) + im_[m] * std::sin(th);
    }
    return v;
  }

 private:
  double l_;
  std::vector<double> re_, im_;
};

}  // namespace twave::testing
