#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "twave/errors.hpp"
#include "twave/evolution.hpp"
#include "twave/spectral.hpp"

namespace twave {

RealPeriodicField steady_operator(double c, const RealPeriodicField& phi) {
  const RealPeriodicField px = derivative(phi, 1);
  const RealPeriodicField t = 3.0 * (phi * px) - commutator_LN(phi) - apply_N(phi) - px;
  return 0.5 * t - c * px;
}

BranchResult small_amplitude_branch(int m, int k, double s, std::optional<Grid> grid, int modes) {
  if (m < 1 || k < 1) throw ParameterError("m and k must be >= 1");
  if (modes < 1) throw ParameterError("mode count must be >= 1");
  if (!std::isfinite(s) || std::abs(s) > 0.05)
    throw ParameterError("amplitude |s| must be <= 0.05 (beyond the small-amplitude regime)");
  const int q = m * k;
  if (!grid) {
    int n = 64;
    while (n < 4 * modes * q + 2) n *= 2;
    grid = make_grid(n, std::numbers::pi);
  }
  if (std::abs(grid->half_period() - std::numbers::pi) > 1e-14)
    throw ParameterError("small_amplitude_branch requires l = pi");
  if (grid->size() < 4 * modes * q)
    throw ParameterError("grid too coarse: need N >= 4 * modes * m * k = " +
                         std::to_string(4 * modes * q));

  const Grid& g = *grid;
  const int n = g.size();
  BranchResult res;
  res.c = dispersion_speed(q);
  if (s == 0.0) {
    res.phi = RealPeriodicField::zeros(g);
    return res;
  }

  // basis tables cos(j q x_i), sin(j q x_i)
  Eigen::MatrixXd cosb(n, modes), sinb(n, modes);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < modes; ++j) {
      cosb(i, j) = std::cos((j + 1) * q * g.node(i));
      sinb(i, j) = std::sin((j + 1) * q * g.node(i));
    }
  auto field_of = [&](const Eigen::VectorXd& a) {
    const Eigen::VectorXd v = cosb * a;
    return RealPeriodicField(g, std::vector<double>(v.data(), v.data() + n));
  };
  // unknowns (a_1..a_M, c); equations: sine coefficients of F, then a_1 = s
  auto residual = [&](const Eigen::VectorXd& x) {
    const Eigen::VectorXd a = x.head(modes);
    const RealPeriodicField f = steady_operator(x(modes), field_of(a));
    const Eigen::Map<const Eigen::VectorXd> fv(f.values().data(), n);
    Eigen::VectorXd r(modes + 1);
    r.head(modes) = (2.0 / n) * (sinb.transpose() * fv);
    r(modes) = a(0) - s;
    return r;
  };

  Eigen::VectorXd x = Eigen::VectorXd::Zero(modes + 1);
  x(0) = s;
  x(modes) = res.c;
  Eigen::VectorXd r = residual(x);
  const double fd = 1e-7;
  int it = 0;
  for (; it < 50 && r.lpNorm<Eigen::Infinity>() > 1e-15; ++it) {
    Eigen::MatrixXd jac(modes + 1, modes + 1);
    for (int c = 0; c <= modes; ++c) {
      Eigen::VectorXd xp = x;
      xp(c) += fd;
      jac.col(c) = (residual(xp) - r) / fd;
    }
    const Eigen::VectorXd dx = jac.partialPivLu().solve(-r);
    if (!dx.allFinite()) throw NumericalError("small_amplitude_branch: singular Newton system");
    x += dx;
    r = residual(x);
    if (dx.lpNorm<Eigen::Infinity>() < 1e-15 * (1.0 + x.lpNorm<Eigen::Infinity>())) {
      ++it;
      break;
    }
  }
  if (!(r.lpNorm<Eigen::Infinity>() <= 1e-11))
    throw NumericalError("small_amplitude_branch: Newton did not converge (residual " +
                         std::to_string(r.lpNorm<Eigen::Infinity>()) + ")");
  res.c = x(modes);
  res.phi = field_of(x.head(modes));
  res.newton_iterations = it;
  res.residual = steady_operator(res.c, *res.phi).sup_norm();
  return res;
}

}  // namespace twave
