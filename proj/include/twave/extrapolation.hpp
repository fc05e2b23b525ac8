#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace twave {

enum class Acceleration { None, MPE, RRE };

const char* to_string(Acceleration a) noexcept;
Acceleration parse_acceleration(const std::string& s);

/// Vector extrapolation of a fixed-point sequence x_0, ..., x_k (k >= 2).
///
/// MPE: minimize |sum_{j<k-1} c_j d_j + d_{k-1}| over c (c_{k-1} = 1), with
///      d_j = x_{j+1} - x_j, then s = sum_j (c_j / sum c) x_{j+1}.
/// RRE: minimize |sum_j g_j d_j| subject to sum_j g_j = 1, s = sum_j g_j x_{j+1}.
///
/// Returns nullopt when the weights are not well defined (sum c ~ 0 or a
/// non-finite least-squares solution); callers then keep the last iterate.
std::optional<Eigen::VectorXd> extrapolate(const std::vector<Eigen::VectorXd>& iterates,
                                           Acceleration method);

}  // namespace twave
