#include "twave/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "twave/errors.hpp"
#include "twave/spectral.hpp"

namespace twave {

namespace {
std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParameterError("cannot open '" + path + "' for writing");
  return os;
}

void write_row(std::ostream& os, std::initializer_list<double> vals) {
  bool first = true;
  for (double v : vals) {
    if (!first) os << ',';
    os << format_double(v);
    first = false;
  }
  os << '\n';
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json field_stats(const RealPeriodicField& f) {
  return {{"max", f.max()}, {"min", f.min()}, {"mean", f.mean()}};
}
}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_profile_csv(const std::string& path, const ProfileResult& r) {
  if (!r.u_tilde) throw ParameterError("profile result carries no field to write");
  const RealPeriodicField& u = *r.u;
  const RealPeriodicField ux = derivative(u, 1), uxx = derivative(u, 2), uxxx = derivative(u, 3);
  const RealPeriodicField& h = *r.h;
  const RealPeriodicField htilde = h - r.y;
  auto os = open_out(path);
  os << "# x,u,ux,uxx,uxxx,h,htilde\n";
  const Grid& g = u.grid();
  for (int j = 0; j < g.size(); ++j)
    write_row(os, {g.node(j), u[j], ux[j], uxx[j], uxxx[j], h[j], htilde[j]});
}

ProfileTable read_profile_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot open profile '" + path + "'");
  ProfileTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell = trim(cell);
      double d = 0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), d);
      if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
        throw ParameterError(path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      v.push_back(d);
    }
    if (v.size() != 7)
      throw ParameterError(path + ":" + std::to_string(lineno) + ": expected 7 columns");
    t.x.push_back(v[0]);
    t.u.push_back(v[1]);
    t.ux.push_back(v[2]);
    t.uxx.push_back(v[3]);
    t.uxxx.push_back(v[4]);
    t.h.push_back(v[5]);
    t.htilde.push_back(v[6]);
  }
  return t;
}

json profile_json(const ProfileResult& r, const SolverConfig& cfg) {
  json j;
  j["parameters"] = {{"cs", r.parameters.cs}, {"g", r.parameters.g}, {"branch", to_string(r.parameters.branch)}};
  j["y"] = r.y;
  j["solver"] = {{"N", cfg.grid.size()},
                 {"l", cfg.grid.half_period()},
                 {"tol_increment", cfg.tol_increment},
                 {"tol_residual", cfg.tol_residual},
                 {"max_iter", cfg.max_iter},
                 {"petviashvili_exponent", cfg.petviashvili_exponent},
                 {"acceleration", to_string(cfg.acceleration)},
                 {"cycle_width", cfg.cycle_width}};
  j["converged"] = r.converged;
  j["message"] = r.message;
  j["iterations"] = r.iterations;
  j["extrapolations"] = r.extrapolations;
  j["m_history"] = r.m_history;
  j["residual_fixedpoint"] = r.residual_fixedpoint;
  j["residual_nonlocal"] = r.residual_nonlocal;
  j["last_increment"] = r.last_increment;
  j["center_shift"] = r.center_shift;
  if (r.h) {
    j["h"] = field_stats(*r.h);
    j["u_tilde"] = field_stats(*r.u_tilde);
    j["tail_sign_changes"] = tail_sign_changes(r);
  }
  return j;
}

void write_trajectory_csv(const std::string& path, const Trajectory& t, double cs) {
  auto os = open_out(path);
  os << (t.variable == IndependentVariable::Z ? "# z" : "# x") << ",y1,y2,y3,y4,alpha\n";
  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    const StateVector& y = t.states[i];
    write_row(os, {t.samples[i], y[0], y[1], y[2], y[3], alpha_of(y[0], y[2], cs)});
  }
}

json trajectory_json(const Trajectory& t) {
  return {{"variable", t.variable == IndependentVariable::Z ? "z" : "x"},
          {"termination", to_string(t.termination)},
          {"samples", t.samples.size()},
          {"end", t.samples.empty() ? 0.0 : t.samples.back()},
          {"alpha_crossings", t.alpha_crossings},
          {"accepted_steps", t.accepted_steps},
          {"rejected_steps", t.rejected_steps}};
}

json shoot_json(const ShootResult& s) {
  json j = trajectory_json(s.trajectory);
  j["outcome"] = to_string(s.outcome);
  j["eigenvalue"] = {s.eigenvalue.real(), s.eigenvalue.imag()};
  j["direction"] = {s.direction[0], s.direction[1], s.direction[2], s.direction[3]};
  j["equilibrium"] = {s.equilibrium[0], s.equilibrium[1], s.equilibrium[2], s.equilibrium[3]};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

void write_snapshots_csv(const std::string& path, const EvolutionResult& r) {
  auto os = open_out(path);
  os << "# t,x,h\n";
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    const RealPeriodicField& h = r.snapshots[i];
    for (int j = 0; j < h.size(); ++j) write_row(os, {r.times[i], h.grid().node(j), h[j]});
  }
}

json evolution_json(const EvolutionResult& r, const EvolutionConfig& cfg) {
  return {{"T", cfg.T},
          {"dt", r.dt},
          {"steps", r.steps},
          {"form", to_string(cfg.form)},
          {"dealias", cfg.dealias},
          {"times", r.times},
          {"sup_history", r.sup_history},
          {"mass_history", r.mass_history},
          {"mass_drift", r.mass_drift()}};
}

json thresholds_json(const Thresholds& t) {
  return {{"g1", t.g1},           {"g2", t.g2},
          {"g2_derived", t.g2_derived}, {"g1_star", t.g1_star},
          {"g1_dstar", t.g1_dstar}, {"g_plus", t.g_plus},
          {"g_minus", t.g_minus},  {"delta_plus", t.delta_plus},
          {"delta_minus", t.delta_minus}};
}

json report_json(const EquilibriumReport& r) {
  json ev = json::array();
  for (const auto& z : r.eigenvalues) ev.push_back({z.real() + 0.0, z.imag() + 0.0});
  const CoefficientSet& c = r.coefficients;
  return {{"cs", r.parameters.cs},
          {"g", r.parameters.g},
          {"branch", to_string(r.parameters.branch)},
          {"y", r.y_value},
          {"alpha", c.alpha},
          {"beta", c.beta},
          {"gamma", c.gamma},
          {"a", c.a},
          {"b", c.b},
          {"delta", c.Delta},
          {"S", c.S},
          {"eigenvalues", ev},
          {"region", to_string(r.region)},
          {"predicted_type", to_string(r.predicted_type)},
          {"thresholds", thresholds_json(r.thresholds)}};
}

json catalog_json(const EquilibriumCatalog& c) {
  json pts = json::array();
  for (const auto& p : c.points)
    pts.push_back({{"label", p.label}, {"state", {p.state[0], p.state[1], p.state[2], p.state[3]}}});
  json j = {{"system", to_string(c.system)},
            {"case", c.case_number},
            {"summary", c.summary()},
            {"points", pts}};
  if (c.family) {
    const QuadricFamily& f = *c.family;
    j["family"] = {{"weights", f.weights},
                   {"rhs", f.rhs},
                   {"shear", f.shear},
                   {"x3_offset", f.x3_offset},
                   {"shape", f.weights[0] > 0 ? "ellipsoid" : "indefinite quadric"}};
  } else {
    j["family"] = nullptr;
  }
  return j;
}

void write_json(const std::string& path, const json& j) {
  auto os = open_out(path);
  os << j.dump(2) << '\n';
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot open config '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParameterError(path + ":" + std::to_string(lineno) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

}  // namespace twave
