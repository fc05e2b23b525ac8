#include "twave/evolution.hpp"

#include <cmath>
#include <sstream>

#include "twave/errors.hpp"
#include "twave/spectral.hpp"

namespace twave {

const char* to_string(EvolutionForm f) noexcept {
  return f == EvolutionForm::Conservative ? "conservative" : "nonconservative";
}

RealPeriodicField rhs(const RealPeriodicField& h, EvolutionForm form, bool dealias) {
  if (form == EvolutionForm::Nonconservative) {
    const RealPeriodicField hx = derivative(h, 1);
    const RealPeriodicField t =
        3.0 * product(h, hx, dealias) - commutator_LN(h, dealias) - apply_N(h) - hx;
    return -0.5 * t;
  }
  const RealPeriodicField nh = apply_N(h);
  const RealPeriodicField flux = 0.75 * product(h, h, dealias) + 0.5 * apply_N(product(h, nh, dealias)) -
                                 0.25 * product(nh, nh, dealias) - 0.5 * apply_Q(h) - 0.5 * h;
  return -derivative(flux, 1);
}

double auto_time_step(const RealPeriodicField& h0) {
  return 0.5 * h0.grid().spacing() / (1.0 + h0.sup_norm());
}

EvolutionResult evolve_recorded(const RealPeriodicField& h0, const EvolutionConfig& cfg) {
  if (!(cfg.T >= 0.0) || !std::isfinite(cfg.T)) throw ParameterError("final time T must be >= 0");
  if (cfg.dt && !(*cfg.dt > 0.0)) throw ParameterError("time step must be positive");
  if (!h0.all_finite()) throw ParameterError("initial field must be finite");

  const double dt_req = cfg.dt.value_or(auto_time_step(h0));
  const long steps = cfg.T == 0.0 ? 0 : static_cast<long>(std::ceil(cfg.T / dt_req - 1e-9));
  const double dt = steps > 0 ? cfg.T / steps : 0.0;

  EvolutionResult res;
  res.dt = dt;
  res.steps = steps;
  auto record = [&](double t, const RealPeriodicField& h) {
    res.times.push_back(t);
    res.snapshots.push_back(h);
    res.sup_history.push_back(h.sup_norm());
    res.mass_history.push_back(h.mean());
  };
  record(0.0, h0);

  auto f = [&](const RealPeriodicField& h) { return rhs(h, cfg.form, cfg.dealias); };
  RealPeriodicField h = h0;
  for (long n = 1; n <= steps; ++n) {
    const RealPeriodicField k1 = f(h);
    const RealPeriodicField k2 = f(h + (0.5 * dt) * k1);
    const RealPeriodicField k3 = f(h + (0.5 * dt) * k2);
    const RealPeriodicField k4 = f(h + dt * k3);
    h = h + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double sup = h.sup_norm();
    if (!std::isfinite(sup) || sup > cfg.blowup_norm) {
      std::ostringstream os;
      os << "blow-up detected at t = " << n * dt << " (sup|h| = " << sup << ")";
      throw NumericalError(os.str());
    }
    if (n == steps || (cfg.snapshot_every > 0 && n % cfg.snapshot_every == 0))
      record(n == steps ? cfg.T : n * dt, h);
  }
  if (steps == 0) record(0.0, h0);
  return res;
}

RealPeriodicField evolve(const RealPeriodicField& h0, const EvolutionConfig& config) {
  return evolve_recorded(h0, config).final();
}

double dispersion_speed(int k) {
  if (k < 1) throw ParameterError("wavenumber k must be >= 1 (got " + std::to_string(k) + ")");
  return -1.0 / (2.0 * (1.0 + static_cast<double>(k) * k)) - 0.5;
}

}  // namespace twave
