#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twave/profile_system.hpp"

namespace twave {

enum class Branch { Plus, Minus };

/// Wave speed c_s (> 0), integration constant g, and the equilibrium branch
/// the wave decays to.
struct WaveParameters {
  double cs = 1.0;
  double g = 0.0;
  Branch branch = Branch::Minus;
};

struct Thresholds {
  double g1 = 0;          // (c+1)^2/3: the two branch roots merge
  double g2 = 0;          // alpha = 0 ellipsoid collapses to a point (printed system)
  double g2_derived = 0;  // vertex value of the alpha = 0 quadric of the derived system
  double g1_star = 0;     // g1 - (c - 1/2)^2/75
  double g1_dstar = 0;    // g1 - 1/12
  double g_plus = 0;      // g1 - delta_plus^2/3
  double g_minus = 0;     // g1 - delta_minus^2/3
  double delta_plus = 0;
  double delta_minus = 0;
};

struct CoefficientSet {
  double alpha = 0, beta = 0, gamma = 0;
  double a = 0, b = 0;
  double Delta = 0;  // b^2 - 4a
  double S = 0;      // gamma^2 + 4 alpha beta
};

enum class Region { R1_left, R1_right, R2, R3_left, R3_right, R4, C0, C1, C2, C3 };
enum class WaveType { NMTW_depression, MTW_depression, TW_elevation, PTW, TW_PTW, Unclassified };

struct EquilibriumReport {
  WaveParameters parameters;
  double y_value = 0;
  CoefficientSet coefficients;
  std::array<std::complex<double>, 4> eigenvalues;
  Region region = Region::C0;
  WaveType predicted_type = WaveType::Unclassified;
  Thresholds thresholds;
};

const char* to_string(Branch b) noexcept;
const char* to_string(Region r) noexcept;
const char* to_string(WaveType t) noexcept;
Branch parse_branch(const std::string& s);

Thresholds thresholds(double cs);

struct BranchRoots {
  double y_plus;
  double y_minus;
};
/// y+- = (2/3)((c+1) +- sqrt((c+1)^2 - 3g)). Throws ParameterError when g > g1.
BranchRoots branch_roots(double cs, double g);
double branch_root(const WaveParameters& p);

CoefficientSet coefficients(double cs, double g, Branch branch);
inline CoefficientSet coefficients(const WaveParameters& p) { return coefficients(p.cs, p.g, p.branch); }

/// Roots of z^4 - b z^2 + a, ordered as (+r1, -r1, +r2, -r2) with
/// r1^2 = (b + sqrt(Delta))/2, r2^2 = (b - sqrt(Delta))/2.
std::array<std::complex<double>, 4> char_eigenvalues(const CoefficientSet& cs);

/// Region of (b, a) in the partition cut out by the curves C0..C3.
/// Curve membership uses absolute tolerance 1e-12 and wins ties.
Region classify_region(double a, double b, double Delta);

/// Wave type tabulated for (cs, g, branch). Throws ParameterError for g >= g1.
WaveType predicted_wave_type(double cs, double g, Branch branch);

/// 4x4 linearization about (y, 0, 0, 0): alpha on the superdiagonal of rows
/// 1-3, last row (beta, 0, -gamma, 0).
Eigen::Matrix4d linearization_matrix(double cs, double g, Branch branch);

EquilibriumReport make_report(const WaveParameters& p);

/// Quadric of singular equilibria on alpha = 0:
///   w1 x1^2 + w2 x2^2 + w3 x3^2 = rhs,
///   y2 = x1 + shear * x2, y4 = x2, y3 = x3 - x3_offset, y1 = y3 + (2/3)(c + 1/2).
struct QuadricFamily {
  ProfileSystem system;
  double cs, g;
  std::array<double, 3> weights;
  double shear;
  double x3_offset;
  double rhs;

  StateVector map(double x1, double x2, double x3) const;
  /// Value of w.x^2 - rhs at a state on alpha = 0 (zero on the family).
  double residual(const StateVector& y) const;
  /// True when the real solution set is empty.
  bool empty() const;
  /// True when the solution set is a single point.
  bool single_point() const;
  /// Deterministic sample of `count` points on the family (empty if none).
  std::vector<StateVector> sample(int count) const;
};

QuadricFamily singular_family(double cs, double g, ProfileSystem system);

struct PointEquilibrium {
  std::string label;  // "y_plus", "y_minus", "merged", "Y_star"
  StateVector state;
};

/// Equilibria of the desingularized profile system, by the five cases
/// g < g1, g = g1, g1 < g < g2, g = g2, g > g2 (equalities to 1e-12 relative).
/// For the Derived system the alpha = 0 set is never empty, so the last two
/// cases reduce to "family only".
struct EquilibriumCatalog {
  ProfileSystem system;
  double cs, g;
  int case_number;
  std::vector<PointEquilibrium> points;
  std::optional<QuadricFamily> family;

  bool empty() const { return points.empty() && !family; }
  std::string summary() const;
  /// Points plus `family_samples` sampled family members.
  std::vector<StateVector> all_states(int family_samples) const;
};

EquilibriumCatalog equilibria_catalog(double cs, double g,
                                      ProfileSystem system = ProfileSystem::Derived);

}  // namespace twave
