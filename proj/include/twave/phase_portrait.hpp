#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "twave/equilibria.hpp"
#include "twave/profile_system.hpp"

namespace twave {

enum class Termination { TimeLimit, AlphaCrossing, Blowup, ReturnedToEquilibrium };
enum class IndependentVariable { Z, X };

const char* to_string(Termination t) noexcept;

/// dY/dX = (y2, y3, y4, (dy4/dZ) / alpha). Throws NumericalError
/// ("singularity as alpha = 0") when |alpha| <= 1e-12.
StateVector vector_field_X(const StateVector& y, const WaveParameters& p,
                           ProfileSystem system = ProfileSystem::Derived);

/// dY/dZ = (alpha y2, alpha y3, alpha y4, dy4/dZ), with dX = alpha dZ.
StateVector vector_field_Z(const StateVector& y, const WaveParameters& p,
                           ProfileSystem system = ProfileSystem::Derived);

/// Central-difference Jacobian of vector_field_Z.
Eigen::Matrix4d jacobian_Z(const StateVector& y, const WaveParameters& p,
                           ProfileSystem system = ProfileSystem::Derived, double step = 1e-6);

struct StepControl {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 1e-3;
  double min_step = 1e-14;
  long max_steps = 2'000'000;
  /// 0: record every accepted step; otherwise this many uniform intervals
  /// from dense output (plus the final state).
  int output_points = 0;
  IndependentVariable variable = IndependentVariable::Z;
  double blowup_norm = 1e8;
  bool stop_on_alpha_crossing = false;
  /// Equilibrium for return detection: the orbit must first leave the ball
  /// of radius 100 r, then come back within r = 1e-8 (1 + |E|).
  std::optional<StateVector> return_target;
};

struct Trajectory {
  IndependentVariable variable = IndependentVariable::Z;
  std::vector<double> samples;
  std::vector<StateVector> states;
  Termination termination = Termination::TimeLimit;
  std::vector<double> alpha_crossings;
  long accepted_steps = 0;
  long rejected_steps = 0;
};

/// Dormand-Prince 5(4) integration from s = 0 to s_max (>= 0) of the chosen
/// field. Throws NumericalError on step-size underflow or when the X-form
/// meets alpha = 0.
Trajectory integrate_orbit(const StateVector& initial, const WaveParameters& p, double s_max,
                           const StepControl& control = {},
                           ProfileSystem system = ProfileSystem::Derived);

enum class ShootOutcome { Escape, HomoclinicCandidate, PeriodicCandidate, Degenerate };
const char* to_string(ShootOutcome o) noexcept;

struct ShootResult {
  Trajectory trajectory;
  ShootOutcome outcome = ShootOutcome::Degenerate;
  std::complex<double> eigenvalue;
  StateVector direction;
  StateVector equilibrium;
  std::string note;
};

/// Start at E + eps v, v the (real part of the) eigenvector of the leading
/// unstable eigenvalue of the linearization at E = (y_branch, 0, 0, 0),
/// normalized to unit length with its first nonzero entry positive.
/// Throws NumericalError("no unstable manifold") if no eigenvalue has
/// positive real part.
ShootResult shoot_unstable(const WaveParameters& p, double eps, double z_max,
                           const StepControl& control = {},
                           ProfileSystem system = ProfileSystem::Derived);

}  // namespace twave
