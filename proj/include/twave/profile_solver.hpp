#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twave/equilibria.hpp"
#include "twave/extrapolation.hpp"
#include "twave/field.hpp"
#include "twave/spectral.hpp"

namespace twave {

/// amplitude * sech^2(width * x); amplitude defaults to +1 on branch minus
/// (elevation) and -1 on branch plus (depression).
struct SechSquared {
  std::optional<double> amplitude;
  double width = 0.5;
};
struct Gaussian {
  std::optional<double> amplitude;
  double width = 0.5;
};
/// Profile CSV previously written by write_profile_csv; must be on the solver grid.
struct FromFile {
  std::string path;
};
/// Explicit starting perturbation u~ (used by continuation).
struct FromField {
  RealPeriodicField u_tilde;
};
using InitialGuess = std::variant<SechSquared, Gaussian, FromFile, FromField>;

struct SolverConfig {
  Grid grid = make_grid(1024, 100.0);
  double tol_increment = 1e-12;
  double tol_residual = 1e-10;
  int max_iter = 1000;
  double petviashvili_exponent = 2.0;
  Acceleration acceleration = Acceleration::MPE;
  int cycle_width = 6;
  InitialGuess initial_guess = SechSquared{};
  /// Required |m - 1| at convergence.
  double tol_m = 1e-8;

  void validate() const;
};

struct ProfileResult {
  WaveParameters parameters;
  double y = 0;  // branch root
  std::optional<RealPeriodicField> u_tilde;
  std::optional<RealPeriodicField> u;
  std::optional<RealPeriodicField> h;
  int iterations = 0;
  int extrapolations = 0;
  std::vector<double> m_history;
  double residual_fixedpoint = 0;  // sup |L u~ - N(u~)|
  double residual_nonlocal = 0;    // sup of the nonlocal profile equation at h
  double last_increment = 0;
  double center_shift = 0;  // translation applied when centering
  bool converged = false;
  std::string message;
};

/// Linear symbol Lambda(k) and quadratic map N of the fixed-point form
///   Lambda(D) u~ = N(u~)
/// of the profile equation about the branch equilibrium y:
///   Lambda(k) = alpha (1+k^2)^2 - (y/2) k^2 - (1/2)(1+k^2),
///   N(u) = -1/2 ( 3/2 J((Ju)^2) + D(u_x Ju) - 1/2 J(u_x^2) ),  J = 1 - D^2.
class FixedPointOperators {
 public:
  FixedPointOperators(const WaveParameters& params, const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  const WaveParameters& parameters() const noexcept { return params_; }
  double y() const noexcept { return y_; }
  double alpha() const noexcept { return alpha_; }
  const Spectrum& symbol() const noexcept { return lambda_; }

  RealPeriodicField linear(const RealPeriodicField& u) const;
  RealPeriodicField linear_inverse(const RealPeriodicField& f) const;
  RealPeriodicField nonlinear(const RealPeriodicField& u) const;

 private:
  Grid grid_;
  WaveParameters params_;
  double y_, alpha_;
  Spectrum lambda_;
};

/// Throws ParameterError when g > g1 and NumericalError when
/// min |Lambda| < 1e-10 max |Lambda| on the grid.
FixedPointOperators fixedpoint_operators(const WaveParameters& params, const Grid& grid);

struct StepResult {
  RealPeriodicField next;
  double m;
};

/// m = <L u, u> / <N(u), u>,  next = m^gamma L^{-1} N(u).
StepResult petviashvili_step(const RealPeriodicField& u, const FixedPointOperators& ops,
                             double gamma);

/// Iterates to convergence; throws NumericalError on failure.
ProfileResult solve_profile(const WaveParameters& params, const SolverConfig& config);

/// Same iteration, but numerical failures are reported in the result
/// (converged = false, message set) instead of thrown. Parameter errors
/// still throw.
ProfileResult solve_profile_report(const WaveParameters& params, const SolverConfig& config);

/// sup-norm of -c h + 3/4 h^2 + 1/2 N(h Nh) - 1/4 (Nh)^2 - 1/2 Q h - h/2 + g.
double residual_nonlocal(const RealPeriodicField& h, const WaveParameters& params);

/// Solve a path of parameters in order, seeding each point with the previous
/// converged u~. Failures are recorded and do not stop the sweep.
std::vector<ProfileResult> continuation_sweep(const std::vector<WaveParameters>& path,
                                              const SolverConfig& config);

/// Independent solves (each from config.initial_guess); results in input
/// order. The Parallel policy distributes points over OpenMP threads.
std::vector<ProfileResult> solve_batch(const std::vector<WaveParameters>& points,
                                       const SolverConfig& config,
                                       ExecPolicy policy = ExecPolicy::Parallel);

/// Sign changes of h - y on each side of the (centered) peak, ignoring
/// |h - y| <= floor; the smaller of the two counts.
int tail_sign_changes(const ProfileResult& r, double floor = 1e-10);

/// Starting field for a given guess and branch.
RealPeriodicField initial_field(const InitialGuess& guess, const WaveParameters& params,
                                const Grid& grid);

}  // namespace twave
