#pragma once

#include <optional>
#include <vector>

#include "twave/field.hpp"

namespace twave {

enum class EvolutionForm { Nonconservative, Conservative };

const char* to_string(EvolutionForm f) noexcept;

struct EvolutionConfig {
  std::optional<double> dt;  // nullopt: 0.5 dx / (1 + max|h0|)
  double T = 1.0;
  bool dealias = true;
  EvolutionForm form = EvolutionForm::Nonconservative;
  /// Record a snapshot every this many steps (0: initial and final only).
  int snapshot_every = 0;
  double blowup_norm = 1e6;
};

/// h_t for
///   Nonconservative: -1/2 (3 h h_x - [L, Nh] h - N h - h_x)
///   Conservative:    -d/dx (3/4 h^2 + 1/2 N(h Nh) - 1/4 (Nh)^2 - 1/2 Q h - h/2)
RealPeriodicField rhs(const RealPeriodicField& h, EvolutionForm form, bool dealias = true);

double auto_time_step(const RealPeriodicField& h0);

struct EvolutionResult {
  std::vector<double> times;
  std::vector<RealPeriodicField> snapshots;  // always includes t = 0 and t = T
  std::vector<double> sup_history;           // per snapshot
  std::vector<double> mass_history;          // mean(h) per snapshot
  double dt = 0;
  long steps = 0;

  const RealPeriodicField& final() const { return snapshots.back(); }
  double mass_drift() const { return std::abs(mass_history.back() - mass_history.front()); }
};

/// Classical RK4 from h0 to T with a constant step (T / ceil(T / dt)).
/// Throws NumericalError if sup|h| exceeds blowup_norm or turns non-finite.
EvolutionResult evolve_recorded(const RealPeriodicField& h0, const EvolutionConfig& config);
RealPeriodicField evolve(const RealPeriodicField& h0, const EvolutionConfig& config);

/// c_k = -1/(2(1+k^2)) - 1/2, speed of the linear mode cos(k x); k >= 1.
double dispersion_speed(int k);

struct BranchResult {
  double c = 0;
  std::optional<RealPeriodicField> phi;
  int newton_iterations = 0;
  double residual = 0;  // sup of F[c, phi] on the grid
};

/// Small-amplitude periodic wave bifurcating from c_{mk}: Newton on the
/// cosine coefficients of cos(j m k x), j = 1..modes, and the speed c, with
/// the bordering condition (coefficient of cos(m k x)) = s. The grid must
/// have l = pi and N >= 4 modes m k (default: chosen automatically).
/// |s| <= 0.05; s = 0 returns the trivial solution.
BranchResult small_amplitude_branch(int m, int k, double s, std::optional<Grid> grid = std::nullopt,
                                    int modes = 64);

/// F[c, phi] = 1/2 (3 phi phi' - [L, N phi] phi - N phi - phi') - c phi'
RealPeriodicField steady_operator(double c, const RealPeriodicField& phi);

}  // namespace twave
