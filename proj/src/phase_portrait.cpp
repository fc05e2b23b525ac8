#include "twave/phase_portrait.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ode.hpp"
#include "twave/errors.hpp"

namespace twave {

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::TimeLimit: return "TimeLimit";
    case Termination::AlphaCrossing: return "AlphaCrossing";
    case Termination::Blowup: return "Blowup";
    case Termination::ReturnedToEquilibrium: return "ReturnedToEquilibrium";
  }
  return "?";
}

const char* to_string(ShootOutcome o) noexcept {
  switch (o) {
    case ShootOutcome::Escape: return "escape";
    case ShootOutcome::HomoclinicCandidate: return "homoclinic_candidate";
    case ShootOutcome::PeriodicCandidate: return "periodic_candidate";
    case ShootOutcome::Degenerate: return "degenerate";
  }
  return "?";
}

StateVector vector_field_Z(const StateVector& y, const WaveParameters& p, ProfileSystem system) {
  const double a = alpha_of(y[0], y[2], p.cs);
  return StateVector(a * y[1], a * y[2], a * y[3], fourth_component(y, p.cs, p.g, system));
}

StateVector vector_field_X(const StateVector& y, const WaveParameters& p, ProfileSystem system) {
  const double a = alpha_of(y[0], y[2], p.cs);
  if (std::abs(a) <= 1e-12) throw NumericalError("singularity as alpha = 0");
  return StateVector(y[1], y[2], y[3], fourth_component(y, p.cs, p.g, system) / a);
}

Eigen::Matrix4d jacobian_Z(const StateVector& y, const WaveParameters& p, ProfileSystem system,
                           double step) {
  Eigen::Matrix4d j;
  for (int c = 0; c < 4; ++c) {
    StateVector e = StateVector::Zero();
    e[c] = step;
    j.col(c) = (vector_field_Z(y + e, p, system) - vector_field_Z(y - e, p, system)) / (2.0 * step);
  }
  return j;
}

Trajectory integrate_orbit(const StateVector& initial, const WaveParameters& p, double s_max,
                           const StepControl& ctl, ProfileSystem system) {
  if (!initial.allFinite()) throw ParameterError("initial state must be finite");
  if (!(s_max >= 0.0) || !std::isfinite(s_max)) throw ParameterError("integration length must be >= 0");
  if (!(ctl.rtol > 0) || !(ctl.atol > 0)) throw ParameterError("tolerances must be positive");

  const bool xform = ctl.variable == IndependentVariable::X;
  const detail::OdeField f = [&](const StateVector& y) {
    return xform ? vector_field_X(y, p, system) : vector_field_Z(y, p, system);
  };

  Trajectory tr;
  tr.variable = ctl.variable;
  tr.samples.push_back(0.0);
  tr.states.push_back(initial);

  double ret_r = 0.0;
  bool armed = false;
  if (ctl.return_target) ret_r = 1e-8 * (1.0 + ctl.return_target->norm());

  const double out_dt = ctl.output_points > 0 ? s_max / ctl.output_points : 0.0;
  int next_out = 1;

  StateVector y = initial;
  StateVector k1 = f(y);
  double s = 0.0;
  double h = std::min(ctl.initial_step, s_max);
  double alpha_prev = alpha_of(y[0], y[2], p.cs);

  auto emit = [&](double sv, const StateVector& yv) {
    tr.samples.push_back(sv);
    tr.states.push_back(yv);
  };

  while (s < s_max) {
    if (tr.accepted_steps + tr.rejected_steps >= ctl.max_steps)
      throw NumericalError("integrate_orbit: step budget exhausted");
    h = std::min(h, s_max - s);
    if (h < ctl.min_step * std::max(1.0, std::abs(s))) {
      if (s_max - s <= ctl.min_step * std::max(1.0, std::abs(s))) break;
      throw NumericalError("integrate_orbit: step size underflow");
    }
    const detail::Dopri5Step st = detail::dopri5_step(f, y, k1, h, ctl.rtol, ctl.atol);
    const bool ok = std::isfinite(st.error) && st.error <= 1.0;
    const double fac = std::isfinite(st.error)
                           ? std::clamp(0.9 * std::pow(std::max(st.error, 1e-16), -0.2), 0.2, 10.0)
                           : 0.2;
    if (!ok) {
      ++tr.rejected_steps;
      h *= std::min(1.0, fac);
      continue;
    }
    ++tr.accepted_steps;
    const double s_new = (s_max - s - h <= 1e-15 * std::max(1.0, s_max)) ? s_max : s + h;

    if (ctl.output_points > 0) {
      while (next_out < ctl.output_points && next_out * out_dt <= s_new) {
        const double t = next_out * out_dt;
        emit(t, st.dense((t - s) / h));
        ++next_out;
      }
    }

    s = s_new;
    y = st.y1;
    k1 = st.k7;
    h *= fac;
    if (ctl.output_points == 0 || s == s_max) emit(s, y);

    const double alpha_now = alpha_of(y[0], y[2], p.cs);
    if ((alpha_now > 0) != (alpha_prev > 0)) {
      tr.alpha_crossings.push_back(s);
      if (ctl.stop_on_alpha_crossing) {
        if (ctl.output_points > 0 && s != s_max) emit(s, y);
        tr.termination = Termination::AlphaCrossing;
        return tr;
      }
    }
    alpha_prev = alpha_now;

    if (!y.allFinite() || y.norm() > ctl.blowup_norm) {
      if (ctl.output_points > 0 && s != s_max) emit(s, y);
      tr.termination = Termination::Blowup;
      return tr;
    }
    if (ctl.return_target) {
      const double d = (y - *ctl.return_target).norm();
      if (d > 100.0 * ret_r) armed = true;
      if (armed && d <= ret_r) {
        if (ctl.output_points > 0 && s != s_max) emit(s, y);
        tr.termination = Termination::ReturnedToEquilibrium;
        return tr;
      }
    }
  }
  tr.termination = Termination::TimeLimit;
  return tr;
}

ShootResult shoot_unstable(const WaveParameters& p, double eps, double z_max,
                           const StepControl& control, ProfileSystem system) {
  ShootResult res;
  res.equilibrium = StateVector(branch_root(p), 0, 0, 0);
  const Eigen::Matrix4d lin = system == ProfileSystem::Derived
                                  ? linearization_matrix(p.cs, p.g, p.branch)
                                  : jacobian_Z(res.equilibrium, p, system);
  Eigen::EigenSolver<Eigen::Matrix4d> es(lin);
  int best = -1;
  for (int i = 0; i < 4; ++i) {
    const double re = es.eigenvalues()[i].real();
    if (re > 1e-12 && (best < 0 || re > es.eigenvalues()[best].real())) best = i;
  }
  if (best < 0) throw NumericalError("no unstable manifold");
  res.eigenvalue = es.eigenvalues()[best];

  const Eigen::Vector4cd v = es.eigenvectors().col(best);
  StateVector d = v.real();
  if (d.norm() < 1e-8 * v.norm()) d = v.imag();
  d.normalize();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(d[i]) > 1e-14) {
      if (d[i] < 0) d = -d;
      break;
    }
  }
  res.direction = d;

  StepControl ctl = control;
  ctl.variable = IndependentVariable::Z;
  ctl.return_target = res.equilibrium;
  res.trajectory = integrate_orbit(res.equilibrium + eps * d, p, z_max, ctl, system);

  if (eps == 0.0) {
    res.outcome = ShootOutcome::Degenerate;
    res.note = "eps = 0: the start is the equilibrium itself; trajectory is constant";
    return res;
  }
  switch (res.trajectory.termination) {
    case Termination::ReturnedToEquilibrium: res.outcome = ShootOutcome::HomoclinicCandidate; break;
    case Termination::TimeLimit: res.outcome = ShootOutcome::PeriodicCandidate; break;
    default: res.outcome = ShootOutcome::Escape; break;
  }
  if (res.outcome == ShootOutcome::PeriodicCandidate) {
    // bounded only if the orbit stayed in a moderate neighbourhood
    double mx = 0.0;
    for (const auto& s : res.trajectory.states) mx = std::max(mx, (s - res.equilibrium).norm());
    if (mx > 1e3 * (1.0 + res.equilibrium.norm())) res.outcome = ShootOutcome::Escape;
  }
  return res;
}

}  // namespace twave
