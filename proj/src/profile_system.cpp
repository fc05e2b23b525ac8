#include "twave/profile_system.hpp"

namespace twave {

const char* to_string(ProfileSystem s) noexcept {
  return s == ProfileSystem::Derived ? "derived" : "printed";
}

double forcing(const StateVector& y, double cs, ProfileSystem system) noexcept {
  const double y1 = y[0], y2 = y[1], y3 = y[2], y4 = y[3];
  if (system == ProfileSystem::Derived) {
    return -(cs + 1.0) * y1 + (2.0 * cs + 1.5) * y3 + 0.75 * y1 * y1 - 2.5 * y1 * y3 -
           1.25 * y2 * y2 + 3.0 * y2 * y4 + 2.25 * y3 * y3 - 1.5 * y4 * y4;
  }
  const double ct = cs + 0.5;
  return (2.0 * ct + 0.5) * y3 - (ct + 0.5) * y1 +
         0.5 * (1.5 * y1 * y1 + 3.5 * y2 * y2 + y1 * y3 - 1.5 * y3 * y3 - 6.0 * y2 * y4 +
                3.0 * y4 * y4);
}

double fourth_component(const StateVector& y, double cs, double g, ProfileSystem system) noexcept {
  const double v = g + forcing(y, cs, system);
  return system == ProfileSystem::Derived ? -v : v;
}

StateVector nonlinear_remainder(const StateVector& u) noexcept {
  const double u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3];
  const double da = 1.5 * (u1 - u3);
  const double q = 0.75 * u1 * u1 - 2.5 * u1 * u3 - 1.25 * u2 * u2 + 3.0 * u2 * u4 +
                   2.25 * u3 * u3 - 1.5 * u4 * u4;
  return StateVector(da * u2, da * u3, da * u4, -q);
}

}  // namespace twave
