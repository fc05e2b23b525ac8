#include "twave/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "twave/errors.hpp"

namespace twave {

namespace {
constexpr double kCurveTol = 1e-12;

void require_speed(double cs) {
  if (!(cs > 0.0) || !std::isfinite(cs))
    throw ParameterError("wave speed cs must be positive and finite");
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)); }
}  // namespace

const char* to_string(Branch b) noexcept { return b == Branch::Plus ? "plus" : "minus"; }

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::R1_left: return "R1_left";
    case Region::R1_right: return "R1_right";
    case Region::R2: return "R2";
    case Region::R3_left: return "R3_left";
    case Region::R3_right: return "R3_right";
    case Region::R4: return "R4";
    case Region::C0: return "C0";
    case Region::C1: return "C1";
    case Region::C2: return "C2";
    case Region::C3: return "C3";
  }
  return "?";
}

const char* to_string(WaveType t) noexcept {
  switch (t) {
    case WaveType::NMTW_depression: return "NMTW_depression";
    case WaveType::MTW_depression: return "MTW_depression";
    case WaveType::TW_elevation: return "TW_elevation";
    case WaveType::PTW: return "PTW";
    case WaveType::TW_PTW: return "TW_PTW";
    case WaveType::Unclassified: return "Unclassified";
  }
  return "?";
}

Branch parse_branch(const std::string& s) {
  if (s == "plus" || s == "+") return Branch::Plus;
  if (s == "minus" || s == "-") return Branch::Minus;
  throw ParameterError("branch must be 'plus' or 'minus' (got '" + s + "')");
}

Thresholds thresholds(double cs) {
  require_speed(cs);
  Thresholds t;
  const double ct = cs + 0.5;
  t.g1 = (cs + 1.0) * (cs + 1.0) / 3.0;
  t.g2 = ct / 3.0 + 55.0 / 18.0 * ct * ct;
  t.g2_derived = ct / 3.0 + 7.0 / 18.0 * ct * ct;
  t.g1_star = t.g1 - (cs - 0.5) * (cs - 0.5) / 75.0;
  t.g1_dstar = t.g1 - 1.0 / 12.0;
  const double p = 10.0 * cs + 13.0;
  const double r = std::sqrt(p * p + 44.0 * (cs - 0.5) * (cs - 0.5));
  t.delta_plus = (p + r) / 22.0;
  // p - r cancels; use the product of the roots, -44 (cs-1/2)^2 / 22^2
  t.delta_minus = -44.0 * (cs - 0.5) * (cs - 0.5) / (22.0 * 22.0) / t.delta_plus;
  t.g_plus = t.g1 - t.delta_plus * t.delta_plus / 3.0;
  t.g_minus = t.g1 - t.delta_minus * t.delta_minus / 3.0;
  return t;
}

BranchRoots branch_roots(double cs, double g) {
  require_speed(cs);
  if (!std::isfinite(g)) throw ParameterError("g must be finite");
  const double disc = (cs + 1.0) * (cs + 1.0) - 3.0 * g;
  if (disc < 0.0) {
    std::ostringstream os;
    os << "g exceeds g1 = " << (cs + 1.0) * (cs + 1.0) / 3.0
       << ": no real equilibria on the alpha != 0 branch";
    throw ParameterError(os.str());
  }
  const double s = std::sqrt(disc);
  return {2.0 / 3.0 * ((cs + 1.0) + s), 2.0 / 3.0 * ((cs + 1.0) - s)};
}

double branch_root(const WaveParameters& p) {
  const BranchRoots r = branch_roots(p.cs, p.g);
  return p.branch == Branch::Plus ? r.y_plus : r.y_minus;
}

CoefficientSet coefficients(double cs, double g, Branch branch) {
  const double y = branch_root({cs, g, branch});
  CoefficientSet c;
  c.alpha = (3.0 * y - 1.0) / 2.0 - cs;
  c.beta = cs + (2.0 - 3.0 * y) / 2.0;
  c.gamma = 2.0 * cs + (3.0 - 5.0 * y) / 2.0;
  c.a = -c.beta * c.alpha * c.alpha * c.alpha;
  c.b = -c.alpha * c.gamma;
  c.S = c.gamma * c.gamma + 4.0 * c.alpha * c.beta;
  c.Delta = c.b * c.b - 4.0 * c.a;
  return c;
}

std::array<std::complex<double>, 4> char_eigenvalues(const CoefficientSet& c) {
  using cd = std::complex<double>;
  const cd sd = std::sqrt(cd(c.Delta));
  const cd r1 = std::sqrt((c.b + sd) / 2.0);
  const cd r2 = std::sqrt((c.b - sd) / 2.0);
  return {r1, -r1, r2, -r2};
}

Region classify_region(double a, double b, double Delta) {
  if (std::abs(a) <= kCurveTol) return b < -kCurveTol ? Region::C1 : Region::C0;
  if (a > 0.0) {
    const double r = 2.0 * std::sqrt(a);
    if (std::abs(b + r) <= kCurveTol) return Region::C2;
    if (std::abs(b - r) <= kCurveTol) return Region::C3;
    if (Delta < 0.0) return b < 0.0 ? Region::R1_left : Region::R1_right;
    return b > 0.0 ? Region::R2 : Region::R4;
  }
  return b < 0.0 ? Region::R3_left : Region::R3_right;
}

WaveType predicted_wave_type(double cs, double g, Branch branch) {
  const Thresholds t = thresholds(cs);
  if (!(g < t.g1)) throw ParameterError("wave type is tabulated only for g < g1");
  if (cs == 0.5) return WaveType::Unclassified;
  if (branch == Branch::Plus) {
    if (g < t.g_minus) return WaveType::NMTW_depression;
    return cs > 0.5 ? WaveType::PTW : WaveType::MTW_depression;
  }
  if (g < t.g1_dstar) return WaveType::TW_elevation;
  if (cs < 0.5 && g >= t.g1_star) return WaveType::PTW;
  return WaveType::TW_PTW;
}

Eigen::Matrix4d linearization_matrix(double cs, double g, Branch branch) {
  const CoefficientSet c = coefficients(cs, g, branch);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 1) = m(1, 2) = m(2, 3) = c.alpha;
  m(3, 0) = c.beta;
  m(3, 2) = -c.gamma;
  return m;
}

EquilibriumReport make_report(const WaveParameters& p) {
  EquilibriumReport r;
  r.parameters = p;
  r.thresholds = thresholds(p.cs);
  r.y_value = branch_root(p);
  r.coefficients = coefficients(p);
  r.eigenvalues = char_eigenvalues(r.coefficients);
  r.region = classify_region(r.coefficients.a, r.coefficients.b, r.coefficients.Delta);
  r.predicted_type =
      p.g < r.thresholds.g1 ? predicted_wave_type(p.cs, p.g, p.branch) : WaveType::Unclassified;
  return r;
}

// ---------------------------------------------------------------------------
// alpha = 0 family

StateVector QuadricFamily::map(double x1, double x2, double x3) const {
  const double y3 = x3 - x3_offset;
  return StateVector(y3 + 2.0 / 3.0 * (cs + 0.5), x1 + shear * x2, y3, x2);
}

double QuadricFamily::residual(const StateVector& y) const {
  const double x2 = y[3];
  const double x1 = y[1] - shear * x2;
  const double x3 = y[2] + x3_offset;
  return weights[0] * x1 * x1 + weights[1] * x2 * x2 + weights[2] * x3 * x3 - rhs;
}

bool QuadricFamily::empty() const {
  const bool definite = std::all_of(weights.begin(), weights.end(), [](double w) { return w > 0; });
  return definite && rhs < -1e-12 * (1.0 + std::abs(g));
}

bool QuadricFamily::single_point() const {
  const bool definite = std::all_of(weights.begin(), weights.end(), [](double w) { return w > 0; });
  return definite && std::abs(rhs) <= 1e-12 * (1.0 + std::abs(g));
}

std::vector<StateVector> QuadricFamily::sample(int count) const {
  std::vector<StateVector> out;
  if (empty() || count <= 0) return out;
  if (single_point()) {
    out.push_back(map(0.0, 0.0, 0.0));
    return out;
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  if (weights[0] > 0) {
    // ellipsoid: scaled Fibonacci sphere
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double rho = std::sqrt(1.0 - z * z);
      const double th = golden * i;
      out.push_back(map(std::sqrt(rhs / weights[0]) * rho * std::cos(th),
                        std::sqrt(rhs / weights[1]) * rho * std::sin(th),
                        std::sqrt(rhs / weights[2]) * z));
    }
    return out;
  }
  // one negative weight on x1: slice by x1, ellipse in (x2, x3)
  const double wn = -weights[0];
  const double x1min = rhs < 0 ? std::sqrt(-rhs / wn) : 0.0;
  const double span = 2.0 * (1.0 + std::sqrt(std::abs(rhs)));
  for (int i = 0; i < count; ++i) {
    const double t = count > 1 ? static_cast<double>(i) / (count - 1) : 0.5;
    double x1 = rhs < 0 ? (i % 2 ? -1.0 : 1.0) * (x1min + span * t) : span * (2.0 * t - 1.0);
    const double rho2 = std::max(0.0, rhs + wn * x1 * x1);
    const double th = golden * i;
    out.push_back(map(x1, std::sqrt(rho2 / weights[1]) * std::sin(th),
                      std::sqrt(rho2 / weights[2]) * std::cos(th)));
  }
  return out;
}

QuadricFamily singular_family(double cs, double g, ProfileSystem system) {
  const Thresholds t = thresholds(cs);
  const double ct = cs + 0.5;
  if (system == ProfileSystem::Printed)
    return {system, cs, g, {3.5, 3.0 / 7.0, 1.0}, 6.0 / 7.0, 7.0 / 3.0 * ct, 2.0 * (t.g2 - g)};
  return {system, cs, g, {-2.5, 0.6, 1.0}, 1.2, ct / 3.0, 2.0 * (t.g2_derived - g)};
}

std::string EquilibriumCatalog::summary() const {
  std::ostringstream os;
  if (empty()) return "no equilibria";
  os << points.size() << " point equilibri" << (points.size() == 1 ? "um" : "a");
  for (const auto& p : points) os << " [" << p.label << "]";
  if (family) os << " + alpha=0 " << (family->weights[0] > 0 ? "ellipsoid" : "quadric") << " family";
  return os.str();
}

std::vector<StateVector> EquilibriumCatalog::all_states(int family_samples) const {
  std::vector<StateVector> s;
  for (const auto& p : points) s.push_back(p.state);
  if (family) {
    auto f = family->sample(family_samples);
    s.insert(s.end(), f.begin(), f.end());
  }
  return s;
}

EquilibriumCatalog equilibria_catalog(double cs, double g, ProfileSystem system) {
  const Thresholds t = thresholds(cs);
  if (!std::isfinite(g)) throw ParameterError("g must be finite");
  EquilibriumCatalog cat{system, cs, g, 0, {}, std::nullopt};
  const bool at_g1 = near(g, t.g1);
  if (at_g1) {
    const double y = 2.0 / 3.0 * (cs + 1.0);
    cat.points.push_back({"merged", StateVector(y, 0, 0, 0)});
    cat.case_number = 2;
  } else if (g < t.g1) {
    const BranchRoots r = branch_roots(cs, g);
    cat.points.push_back({"y_plus", StateVector(r.y_plus, 0, 0, 0)});
    cat.points.push_back({"y_minus", StateVector(r.y_minus, 0, 0, 0)});
    cat.case_number = 1;
  }

  const QuadricFamily fam = singular_family(cs, g, system);
  if (system == ProfileSystem::Derived) {
    if (cat.case_number == 0) cat.case_number = 3;
    cat.family = fam;
    return cat;
  }
  if (cat.case_number == 0) {
    if (near(g, t.g2)) {
      cat.case_number = 4;
      cat.points.push_back({"Y_star", fam.map(0.0, 0.0, 0.0)});
      return cat;
    }
    cat.case_number = g < t.g2 ? 3 : 5;
  }
  if (!fam.empty() && !fam.single_point()) cat.family = fam;
  return cat;
}

}  // namespace twave
