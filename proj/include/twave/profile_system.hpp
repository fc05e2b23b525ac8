#pragma once

#include <Eigen/Dense>

namespace twave {

/// Y = (u, u', u'', u''') for the traveling-wave profile u, h = u - u''.
using StateVector = Eigen::Vector4d;

/// Which right-hand side to use for the fourth equation of the profile system.
///
/// Derived: obtained by expanding (1 - d^2) applied to the profile equation,
///   alpha(y1, y3) u'''' + g + F(Y) = 0,
///   F = -(c+1) y1 + (2c + 3/2) y3 + 3/4 y1^2 - 5/2 y1 y3 - 5/4 y2^2
///       + 3 y2 y4 + 9/4 y3^2 - 3/2 y4^2,
///   so dy4/dZ = -(g + F). Its linearization at (y, 0, 0, 0) has the last
///   row (beta, 0, -gamma, 0).
/// Printed: the published form dy4/dZ = g + F with
///   F = (2c~ + 1/2) y3 - (c~ + 1/2) y1
///       + 1/2 (3/2 y1^2 + 7/2 y2^2 + y1 y3 - 3/2 y3^2 - 6 y2 y4 + 3 y4^2),
///   c~ = c + 1/2. Kept to reproduce the published equilibrium catalog; its
///   Jacobian does not match the (beta, gamma) linearization.
enum class ProfileSystem { Derived, Printed };

const char* to_string(ProfileSystem s) noexcept;

/// alpha(y1, y3) = 3/2 (y1 - y3) - (c + 1/2); the coefficient of u''''.
inline double alpha_of(double y1, double y3, double cs) noexcept {
  return 1.5 * (y1 - y3) - (cs + 0.5);
}

/// F(Y) of the chosen system (without g).
double forcing(const StateVector& y, double cs, ProfileSystem system) noexcept;

/// Fourth component of the desingularized field, dy4/dZ.
double fourth_component(const StateVector& y, double cs, double g, ProfileSystem system) noexcept;

/// Nonlinear remainder G(U) of dU/dZ = L U + G(U) about (y_eq, 0, 0, 0),
/// for the Derived system (exact: the field is polynomial of degree 2).
StateVector nonlinear_remainder(const StateVector& u) noexcept;

/// Reversibility involution S = diag(1, -1, 1, -1).
inline StateVector reverse(const StateVector& y) noexcept {
  return StateVector(y[0], -y[1], y[2], -y[3]);
}

}  // namespace twave
