#include "ode.hpp"

#include <algorithm>
#include <cmath>

namespace twave::detail {

namespace {
// Dormand & Prince (1980), with Shampine's dense output coefficients
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
}  // namespace

StateVector Dopri5Step::dense(double t) const {
  const double t1 = 1.0 - t;
  return r[0] + t * (r[1] + t1 * (r[2] + t * (r[3] + t1 * r[4])));
}

Dopri5Step dopri5_step(const OdeField& f, const StateVector& y0, const StateVector& k1, double h,
                       double rtol, double atol) {
  const StateVector k2 = f(y0 + h * a21 * k1);
  const StateVector k3 = f(y0 + h * (a31 * k1 + a32 * k2));
  const StateVector k4 = f(y0 + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const StateVector k5 = f(y0 + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const StateVector k6 = f(y0 + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
  Dopri5Step s;
  s.y1 = y0 + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  s.k7 = f(s.y1);
  const StateVector err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * s.k7);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(s.y1[i]));
    acc += (err[i] / sc) * (err[i] / sc);
  }
  s.error = std::sqrt(acc / 4.0);

  const StateVector ydiff = s.y1 - y0;
  const StateVector bspl = h * k1 - ydiff;
  s.r[0] = y0;
  s.r[1] = ydiff;
  s.r[2] = bspl;
  s.r[3] = ydiff - h * s.k7 - bspl;
  s.r[4] = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * s.k7);
  return s;
}

}  // namespace twave::detail
