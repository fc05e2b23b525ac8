#pragma once

#include <functional>

#include "twave/profile_system.hpp"

namespace twave::detail {

using OdeField = std::function<StateVector(const StateVector&)>;

/// One Dormand-Prince 5(4) trial step with the FSAL derivative k1 = f(y0).
struct Dopri5Step {
  StateVector y1;
  StateVector k7;  // f(y1), reused as the next k1
  double error;    // scaled RMS error estimate; accept when <= 1
  StateVector r[5];  // dense-output coefficients

  /// Continuous extension at theta in [0, 1].
  StateVector dense(double theta) const;
};

Dopri5Step dopri5_step(const OdeField& f, const StateVector& y0, const StateVector& k1, double h,
                       double rtol, double atol);

}  // namespace twave::detail
