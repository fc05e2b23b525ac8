#include "twave/extrapolation.hpp"

#include <cmath>
#include <string>

#include "twave/errors.hpp"

namespace twave {

const char* to_string(Acceleration a) noexcept {
  switch (a) {
    case Acceleration::None: return "none";
    case Acceleration::MPE: return "mpe";
    case Acceleration::RRE: return "rre";
  }
  return "?";
}

Acceleration parse_acceleration(const std::string& s) {
  if (s == "none") return Acceleration::None;
  if (s == "mpe") return Acceleration::MPE;
  if (s == "rre") return Acceleration::RRE;
  throw ParameterError("acceleration must be none, mpe or rre (got '" + s + "')");
}

std::optional<Eigen::VectorXd> extrapolate(const std::vector<Eigen::VectorXd>& xs,
                                           Acceleration method) {
  const int k = static_cast<int>(xs.size()) - 1;
  if (method == Acceleration::None || k < 2) return std::nullopt;
  const Eigen::Index n = xs[0].size();

  Eigen::MatrixXd d(n, k);
  for (int j = 0; j < k; ++j) d.col(j) = xs[j + 1] - xs[j];

  Eigen::VectorXd w(k);
  if (method == Acceleration::MPE) {
    const Eigen::VectorXd c =
        d.leftCols(k - 1).colPivHouseholderQr().solve(-d.col(k - 1));
    w.head(k - 1) = c;
    w(k - 1) = 1.0;
  } else {
    // eliminate the constraint: g_{k-1} = 1 - sum_{j<k-1} g_j
    const Eigen::MatrixXd e = d.leftCols(k - 1).colwise() - d.col(k - 1);
    const Eigen::VectorXd c = e.colPivHouseholderQr().solve(-d.col(k - 1));
    w.head(k - 1) = c;
    w(k - 1) = 1.0 - c.sum();
  }
  const double sum = w.sum();
  if (!std::isfinite(sum) || std::abs(sum) < 1e-12 * w.cwiseAbs().sum() || !w.allFinite())
    return std::nullopt;
  w /= sum;

  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < k; ++j) s += w(j) * xs[j + 1];
  if (!s.allFinite()) return std::nullopt;
  return s;
}

}  // namespace twave
