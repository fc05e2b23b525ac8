#include "twave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "twave/errors.hpp"

namespace twave {

namespace {
using cd = std::complex<double>;

Spectrum symbol_table(const Grid& g, const std::function<cd(double)>& s) {
  const int half = g.size() / 2;
  Spectrum t(half + 1);
  for (int m = 0; m <= half; ++m) t[m] = s(g.half_wavenumber(m));
  return t;
}
}  // namespace

Spectrum forward(const RealPeriodicField& f) {
  Spectrum out(f.size() / 2 + 1);
  f.grid().plan().forward(f.values(), out);
  return out;
}

RealPeriodicField inverse(const Grid& grid, const Spectrum& spec) {
  if (static_cast<int>(spec.size()) != grid.size() / 2 + 1)
    throw ParameterError("spectrum size does not match grid");
  std::vector<double> v(grid.size());
  grid.plan().inverse(spec, v);
  return RealPeriodicField(grid, std::move(v));
}

RealPeriodicField apply_symbol(const RealPeriodicField& f, const Spectrum& symbol) {
  Spectrum s = forward(f);
  if (symbol.size() != s.size()) throw ParameterError("symbol size does not match grid");
  const std::size_t nyq = s.size() - 1;
  for (std::size_t m = 0; m < nyq; ++m) s[m] *= symbol[m];
  s[0] = s[0].real();
  s[nyq] = s[nyq].real() * symbol[nyq].real();
  return inverse(f.grid(), s);
}

RealPeriodicField apply_symbol(const RealPeriodicField& f, const std::function<cd(double)>& symbol) {
  return apply_symbol(f, symbol_table(f.grid(), symbol));
}

RealPeriodicField derivative(const RealPeriodicField& f, int order) {
  if (order < 1) throw ParameterError("derivative order must be >= 1 (got " + std::to_string(order) + ")");
  return apply_symbol(f, [order](double k) { return std::pow(cd(0.0, k), order); });
}

RealPeriodicField apply_Q(const RealPeriodicField& f) {
  return apply_symbol(f, [](double k) { return cd(1.0 / (1.0 + k * k)); });
}
RealPeriodicField apply_L(const RealPeriodicField& f) {
  return apply_symbol(f, [](double k) { return cd(k * k / (1.0 + k * k)); });
}
RealPeriodicField apply_N(const RealPeriodicField& f) {
  return apply_symbol(f, [](double k) { return cd(0.0, k / (1.0 + k * k)); });
}
RealPeriodicField apply_J(const RealPeriodicField& f) {
  return apply_symbol(f, [](double k) { return cd(1.0 + k * k); });
}

std::vector<double> euler_maclaurin_weights(int count) {
  // B_{2j}/(2j)! = 2 (-1)^{j+1} zeta(2j) / (2 pi)^{2j}
  std::vector<double> w(count);
  const double tau = 2.0 * std::numbers::pi;
  for (int j = 1; j <= count; ++j)
    w[j - 1] = 2.0 * (j % 2 ? 1.0 : -1.0) * std::riemann_zeta(2.0 * j) / std::pow(tau, 2 * j);
  return w;
}

RealPeriodicField helmholtz_kernel(const RealPeriodicField& f, ExecPolicy policy) {
  const Grid& g = f.grid();
  const int n = g.size();
  const double l = g.half_period();
  const double h = g.spacing();
  const bool parallel = policy == ExecPolicy::Parallel;

  // Integrand F(d) = G(d) f(x_i + d) on [0, 2l]. G is smooth there; its odd
  // derivatives jump by exactly 1 across the ends, so by Leibniz
  //   F^(2j-1)(2l) - F^(2j-1)(0) = sum_{r<j} C(2j-1, 2r) f^(2r)(x_i)
  // and the trapezoidal sum is corrected term by term.
  std::vector<double> kern(n);
  const double denom = 2.0 * std::sinh(l);
  for (int p = 0; p < n; ++p) kern[p] = std::cosh(l - p * h) / denom;

  // circulant second-derivative matrix of the trigonometric interpolant
  std::vector<double> d2(n);
  {
    const double hs = 2.0 * std::numbers::pi / n, scale = std::pow(std::numbers::pi / l, 2);
    d2[0] = scale * (-std::numbers::pi * std::numbers::pi / (3.0 * hs * hs) - 1.0 / 6.0);
    for (int p = 1; p < n; ++p) {
      const double s = std::sin(p * hs / 2.0);
      d2[p] = scale * (p % 2 ? 0.5 : -0.5) / (s * s);
    }
  }

  const auto vals = f.values();
  std::vector<double> out(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n; ++i) {
    double tr = 0.0;
    for (int p = 0; p < n; ++p) tr += kern[p] * vals[(i + p) % n];
    out[i] = h * tr;
  }

  constexpr int max_terms = 40;
  const std::vector<double> w = euler_maclaurin_weights(max_terms);
  std::vector<std::vector<double>> even{std::vector<double>(vals.begin(), vals.end())};
  std::vector<double> corr(n);
  const double size = std::max(f.sup_norm(), 1e-300);
  for (int j = 1; j <= max_terms; ++j) {
    if (j > 1) {
      const auto& prev = even.back();
      std::vector<double> next(n);
#pragma omp parallel for schedule(static) if (parallel)
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int p = 0; p < n; ++p) s += d2[(p - i + n) % n] * prev[p];
        next[i] = s;
      }
      even.push_back(std::move(next));
    }
    const double coef = w[j - 1] * std::pow(h, 2 * j);
    double largest = 0.0;
    for (int i = 0; i < n; ++i) {
      double jump = 0.0, binom = 1.0;  // C(2j-1, 2r)
      for (int r = 0; r < j; ++r) {
        jump += binom * even[r][i];
        binom *= static_cast<double>((2 * j - 1 - 2 * r) * (2 * j - 2 - 2 * r)) / ((2 * r + 1) * (2 * r + 2));
      }
      corr[i] = coef * jump;
      largest = std::max(largest, std::abs(corr[i]));
      out[i] -= corr[i];
    }
    if (largest <= 1e-18 * size) break;
  }
  return RealPeriodicField(g, std::move(out));
}

RealPeriodicField dealias(const RealPeriodicField& f) {
  Spectrum s = forward(f);
  const int cut = f.size() / 3;
  for (int m = cut + 1; m < static_cast<int>(s.size()); ++m) s[m] = 0.0;
  return inverse(f.grid(), s);
}

RealPeriodicField product(const RealPeriodicField& a, const RealPeriodicField& b, bool dealias_on) {
  if (!dealias_on) return a * b;
  return dealias(dealias(a) * dealias(b));
}

RealPeriodicField commutator_LN(const RealPeriodicField& h, bool dealias_products) {
  const RealPeriodicField nh = apply_N(h);
  return apply_L(product(nh, h, dealias_products)) - product(nh, apply_L(h), dealias_products);
}

RealPeriodicField spectral_shift(const RealPeriodicField& f, double shift) {
  return apply_symbol(f, [shift](double k) { return std::exp(cd(0.0, -k * shift)); });
}

double inner_product(const RealPeriodicField& f, const RealPeriodicField& g) {
  if (!(f.grid() == g.grid())) throw ParameterError("fields live on different grids");
  double s = 0.0;
  for (int j = 0; j < f.size(); ++j) s += f[j] * g[j];
  return s * f.grid().spacing();
}

std::vector<double> evaluate_interpolant(const RealPeriodicField& f, double x, int orders) {
  const Grid& g = f.grid();
  const Spectrum s = forward(f);
  const int half = g.size() / 2;
  const double xs = x + g.half_period();
  std::vector<double> out(orders + 1, 0.0);
  for (int m = 0; m <= half; ++m) {
    const double k = g.half_wavenumber(m);
    const double w = (m == 0 || m == half) ? 1.0 : 2.0;
    const cd coef = (m == half) ? cd(s[m].real()) : s[m];
    cd term = coef * std::exp(cd(0.0, k * xs));
    for (int r = 0; r <= orders; ++r) {
      out[r] += w * term.real();
      term *= cd(0.0, k);
    }
  }
  for (double& v : out) v /= g.size();
  return out;
}

}  // namespace twave
