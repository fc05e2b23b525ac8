#include "twave/profile_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twave/errors.hpp"
#include "twave/io.hpp"

namespace twave {

namespace {
using cd = std::complex<double>;

Spectrum table(const Grid& g, auto&& fn) {
  Spectrum s(g.size() / 2 + 1);
  for (int m = 0; m <= g.size() / 2; ++m) s[m] = fn(g.half_wavenumber(m));
  return s;
}

Eigen::VectorXd to_vector(const RealPeriodicField& f) {
  return Eigen::Map<const Eigen::VectorXd>(f.values().data(), f.size());
}

RealPeriodicField to_field(const Grid& g, const Eigen::VectorXd& v) {
  return RealPeriodicField(g, std::vector<double>(v.data(), v.data() + v.size()));
}

// Location of the extremum of |f| to sub-grid accuracy (Newton on f' of the
// trigonometric interpolant, started from the largest node).
double peak_location(const RealPeriodicField& f) {
  const auto v = f.values();
  int jmax = 0;
  for (int j = 1; j < f.size(); ++j)
    if (std::abs(v[j]) > std::abs(v[jmax])) jmax = j;
  const double x0 = f.grid().node(jmax);
  const double dx = f.grid().spacing();
  double x = x0;
  for (int it = 0; it < 30; ++it) {
    const auto d = evaluate_interpolant(f, x, 2);
    if (d[2] == 0.0) break;
    const double step = d[1] / d[2];
    x -= step;
    if (std::abs(x - x0) > dx) return x0;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
  }
  return x;
}

void finish(ProfileResult& r, const FixedPointOperators& ops, RealPeriodicField ut) {
  r.center_shift = peak_location(ut);
  if (r.center_shift != 0.0) ut = spectral_shift(ut, -r.center_shift);
  r.residual_fixedpoint = (ops.linear(ut) - ops.nonlinear(ut)).sup_norm();
  r.u = ut + r.y;
  r.h = apply_J(ut) + r.y;
  r.residual_nonlocal = residual_nonlocal(*r.h, r.parameters);
  r.u_tilde = std::move(ut);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tol_increment > 0) || !(tol_residual > 0) || !(tol_m > 0))
    throw ParameterError("solver tolerances must be positive");
  if (max_iter < 1) throw ParameterError("max_iter must be >= 1");
  if (cycle_width < 2) throw ParameterError("cycle_width must be >= 2");
  if (!(petviashvili_exponent > 0) || !std::isfinite(petviashvili_exponent))
    throw ParameterError("Petviashvili exponent must be positive");
}

FixedPointOperators::FixedPointOperators(const WaveParameters& params, const Grid& grid)
    : grid_(grid), params_(params) {
  y_ = branch_root(params);
  alpha_ = coefficients(params).alpha;
  const double a = alpha_, y = y_;
  lambda_ = table(grid_, [a, y](double k) {
    const double j = 1.0 + k * k;
    return cd(a * j * j - 0.5 * y * k * k - 0.5 * j);
  });
}

RealPeriodicField FixedPointOperators::linear(const RealPeriodicField& u) const {
  return apply_symbol(u, lambda_);
}

RealPeriodicField FixedPointOperators::linear_inverse(const RealPeriodicField& f) const {
  Spectrum inv(lambda_.size());
  std::transform(lambda_.begin(), lambda_.end(), inv.begin(), [](cd v) { return 1.0 / v; });
  return apply_symbol(f, inv);
}

RealPeriodicField FixedPointOperators::nonlinear(const RealPeriodicField& u) const {
  const RealPeriodicField ju = apply_J(u);
  const RealPeriodicField ux = derivative(u, 1);
  const RealPeriodicField t = 1.5 * apply_J(ju * ju) + derivative(ux * ju, 1) - 0.5 * apply_J(ux * ux);
  return -0.5 * t;
}

FixedPointOperators fixedpoint_operators(const WaveParameters& params, const Grid& grid) {
  FixedPointOperators ops(params, grid);
  double lo = INFINITY, hi = 0.0;
  for (const cd& v : ops.symbol()) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  if (lo < 1e-10 * hi) throw NumericalError("linear operator near-singular on grid");
  return ops;
}

StepResult petviashvili_step(const RealPeriodicField& u, const FixedPointOperators& ops,
                             double gamma) {
  const RealPeriodicField nu = ops.nonlinear(u);
  const double num = inner_product(ops.linear(u), u);
  const double den = inner_product(nu, u);
  if (den == 0.0 || u.sup_norm() == 0.0) throw NumericalError("degenerate iterate");
  const double m = num / den;
  if (!std::isfinite(m)) throw NumericalError("divergence detected");
  RealPeriodicField next = std::pow(m, gamma) * ops.linear_inverse(nu);
  if (!next.all_finite()) throw NumericalError("divergence detected");
  return {std::move(next), m};
}

double residual_nonlocal(const RealPeriodicField& h, const WaveParameters& p) {
  const RealPeriodicField nh = apply_N(h);
  const RealPeriodicField r = -p.cs * h + 0.75 * (h * h) + 0.5 * apply_N(h * nh) -
                              0.25 * (nh * nh) - 0.5 * apply_Q(h) - 0.5 * h + p.g;
  return r.sup_norm();
}

RealPeriodicField initial_field(const InitialGuess& guess, const WaveParameters& params,
                                const Grid& grid) {
  const double sign = params.branch == Branch::Minus ? 1.0 : -1.0;
  if (const auto* s = std::get_if<SechSquared>(&guess)) {
    const double a = s->amplitude.value_or(sign), w = s->width;
    return RealPeriodicField::from_function(grid, [a, w](double x) {
      const double c = std::cosh(w * x);
      return a / (c * c);
    });
  }
  if (const auto* s = std::get_if<Gaussian>(&guess)) {
    const double a = s->amplitude.value_or(sign), w = s->width;
    return RealPeriodicField::from_function(grid, [a, w](double x) { return a * std::exp(-w * w * x * x); });
  }
  if (const auto* s = std::get_if<FromField>(&guess)) {
    if (!(s->u_tilde.grid() == grid)) throw ParameterError("initial field is on a different grid");
    return s->u_tilde;
  }
  const auto& path = std::get<FromFile>(guess).path;
  const ProfileTable t = read_profile_csv(path);
  if (static_cast<int>(t.x.size()) != grid.size())
    throw ParameterError("initial profile '" + path + "' has " + std::to_string(t.x.size()) +
                         " rows, solver grid has " + std::to_string(grid.size()));
  for (int j = 0; j < grid.size(); ++j)
    if (std::abs(t.x[j] - grid.node(j)) > 1e-9 * grid.half_period())
      throw ParameterError("initial profile '" + path + "' is not on the solver grid");
  // htilde = J u~, so u~ = Q htilde regardless of the file's branch level
  return apply_Q(RealPeriodicField(grid, t.htilde));
}

ProfileResult solve_profile_report(const WaveParameters& params, const SolverConfig& cfg) {
  cfg.validate();
  ProfileResult r;
  r.parameters = params;
  r.y = branch_root(params);  // ParameterError when g > g1
  try {
    const FixedPointOperators ops = fixedpoint_operators(params, cfg.grid);
    RealPeriodicField u = initial_field(cfg.initial_guess, params, cfg.grid);

    bool done = false;
    int stalled = 0;  // fixed-point tests passed while the nonlocal residual did not
    double stalled_residual = 0;
    // one Petviashvili step plus the convergence test
    auto step = [&]() {
      StepResult s = petviashvili_step(u, ops, cfg.petviashvili_exponent);
      r.last_increment = max_abs_diff(s.next, u);
      u = std::move(s.next);
      ++r.iterations;
      r.m_history.push_back(s.m);
      if (u.sup_norm() > 1e8) throw NumericalError("divergence detected");
      if (r.last_increment < cfg.tol_increment && std::abs(s.m - 1.0) < cfg.tol_m) {
        const RealPeriodicField h = apply_J(u) + r.y;
        stalled_residual = residual_nonlocal(h, params);
        done = stalled_residual <= cfg.tol_residual;
        if (!done) ++stalled;
      }
    };

    auto running = [&] { return !done && stalled < 3 && r.iterations < cfg.max_iter; };
    while (running()) {
      if (cfg.acceleration == Acceleration::None) {
        step();
        continue;
      }
      std::vector<Eigen::VectorXd> cycle{to_vector(u)};
      for (int j = 0; j < cfg.cycle_width && running(); ++j) {
        step();
        cycle.push_back(to_vector(u));
      }
      if (!running() || static_cast<int>(cycle.size()) <= cfg.cycle_width) continue;
      if (auto ex = extrapolate(cycle, cfg.acceleration)) {
        u = to_field(cfg.grid, *ex);
        ++r.extrapolations;
      }
    }

    if (u.sup_norm() < 1e-10) throw NumericalError("iteration collapsed to the trivial solution");
    finish(r, ops, u);
    if (done) {
      r.converged = true;
      r.message = "converged";
    } else if (stalled >= 3) {
      std::ostringstream os;
      os << "fixed point reached but nonlocal residual " << stalled_residual
         << " exceeds tol_residual " << cfg.tol_residual << " (grid too coarse?)";
      r.message = os.str();
    } else {
      std::ostringstream os;
      os << "max_iter (" << cfg.max_iter << ") exceeded; last increment " << r.last_increment
         << ", nonlocal residual " << r.residual_nonlocal;
      r.message = os.str();
    }
  } catch (const NumericalError& e) {
    r.converged = false;
    r.message = e.what();
  }
  return r;
}

ProfileResult solve_profile(const WaveParameters& params, const SolverConfig& config) {
  ProfileResult r = solve_profile_report(params, config);
  if (!r.converged) throw NumericalError(r.message);
  return r;
}

std::vector<ProfileResult> continuation_sweep(const std::vector<WaveParameters>& path,
                                              const SolverConfig& config) {
  std::vector<ProfileResult> out;
  out.reserve(path.size());
  std::optional<RealPeriodicField> seed;
  for (const WaveParameters& p : path) {
    SolverConfig cfg = config;
    if (seed) cfg.initial_guess = FromField{*seed};
    try {
      out.push_back(solve_profile_report(p, cfg));
      if (out.back().converged) seed = out.back().u_tilde;
    } catch (const ParameterError& e) {
      ProfileResult r;
      r.parameters = p;
      r.message = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<ProfileResult> solve_batch(const std::vector<WaveParameters>& points,
                                       const SolverConfig& config, ExecPolicy policy) {
  const int n = static_cast<int>(points.size());
  std::vector<ProfileResult> out(n);
  auto one = [&](int i) {
    try {
      out[i] = solve_profile_report(points[i], config);
    } catch (const ParameterError& e) {
      out[i].parameters = points[i];
      out[i].message = e.what();
    }
  };
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) one(i);
  } else {
    for (int i = 0; i < n; ++i) one(i);
  }
  return out;
}

int tail_sign_changes(const ProfileResult& r, double floor) {
  if (!r.h) return 0;
  const RealPeriodicField& h = *r.h;
  const int n = h.size();
  const int mid = n / 2;  // node x = 0, where the profile is centered
  auto count = [&](int dir) {
    int changes = 0, last = 0;
    for (int s = 1; s < n / 2; ++s) {
      const double v = h[mid + dir * s] - r.y;
      if (std::abs(v) <= floor) continue;
      const int sg = v > 0 ? 1 : -1;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  };
  return std::min(count(1), count(-1));
}

}  // namespace twave
