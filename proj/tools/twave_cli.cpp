// twave: command-line front end for the traveling-wave toolkit.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twave/equilibria.hpp"
#include "twave/errors.hpp"
#include "twave/evolution.hpp"
#include "twave/io.hpp"
#include "twave/phase_portrait.hpp"
#include "twave/profile_solver.hpp"
#include "twave/spectral.hpp"
#include "twave/sweep.hpp"

using namespace twave;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNumerical = 3;

struct Options {
  double cs = 1.0;
  double g = 0.0;
  std::string branch = "minus";
  int N = 1024;
  double l = 100.0;
  double tol = 1e-12;
  int max_iter = 1000;
  std::string accel = "mpe";
  double eps = 1e-5;
  double zmax = 50.0;
  double T = 10.0;
  std::optional<double> dt;
  int m = 1;
  int k = 1;
  double amp = 1e-3;
  int kmax = 8;
  std::string out;
  std::string config;
  std::string system = "derived";
  // solve
  bool translate = false;
  std::string init;
  // sweep
  std::string mode = "continuation";
  std::optional<double> g_end;
  std::optional<double> cs_end;
  int steps = 11;
  bool independent = false;
  // evolve
  std::string form = "nonconservative";
  bool no_dealias = false;
  int snapshots = 10;
  // phase
  int output_points = 2000;
};

ProfileSystem parse_system(const std::string& s) {
  if (s == "derived") return ProfileSystem::Derived;
  if (s == "printed") return ProfileSystem::Printed;
  throw ParameterError("system must be 'derived' or 'printed' (got '" + s + "')");
}

EvolutionForm parse_form(const std::string& s) {
  if (s == "nonconservative") return EvolutionForm::Nonconservative;
  if (s == "conservative") return EvolutionForm::Conservative;
  throw ParameterError("form must be 'nonconservative' or 'conservative' (got '" + s + "')");
}

std::string prefix_or(const Options& o, const char* fallback) { return o.out.empty() ? fallback : o.out; }

// g above g1 leaves no branch equilibrium to build a wave on; reported as a
// numerical (no-solution) outcome, not a malformed input.
void require_branch(const WaveParameters& p) {
  const double g1 = thresholds(p.cs).g1;
  if (p.g > g1) {
    throw NumericalError("g exceeds g1 = " + format_double(g1) + " for cs = " + format_double(p.cs) +
                         ": no branch equilibrium");
  }
}

SolverConfig solver_config(const Options& o) {
  SolverConfig c;
  c.grid = make_grid(o.N, o.l);
  c.tol_increment = o.tol;
  c.max_iter = o.max_iter;
  c.acceleration = parse_acceleration(o.accel);
  if (!o.init.empty()) c.initial_guess = FromFile{o.init};
  c.validate();
  return c;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_classify(const Options& o) {
  const ProfileSystem sys = parse_system(o.system);
  const Thresholds th = thresholds(o.cs);
  json run = {{"command", "classify"}, {"cs", o.cs}, {"g", o.g}, {"system", to_string(sys)}};
  run["thresholds"] = thresholds_json(th);
  json branches = json::object();
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    if (o.g > th.g1) {
      branches[to_string(b)] = {{"available", false}, {"reason", "g exceeds g1"}};
      continue;
    }
    branches[to_string(b)] = report_json(make_report({o.cs, o.g, b}));
  }
  run["branches"] = branches;
  run["catalog"] = catalog_json(equilibria_catalog(o.cs, o.g, sys));
  if (!o.out.empty()) write_json(o.out + ".json", run);
  print_json(run);
  return kOk;
}

int cmd_solve(const Options& o) {
  const WaveParameters p{o.cs, o.g, parse_branch(o.branch)};
  const SolverConfig cfg = solver_config(o);
  require_branch(p);
  const ProfileResult r = solve_profile_report(p, cfg);
  const std::string prefix = prefix_or(o, "profile");

  json run = {{"command", "solve"}};
  run["profile"] = profile_json(r, cfg);
  run["outputs"] = json::array();
  if (r.u_tilde) {
    write_profile_csv(prefix + ".csv", r);
    run["outputs"].push_back(prefix + ".csv");
  }
  run["outputs"].push_back(prefix + ".json");

  if (o.translate && r.converged) {
    EvolutionConfig ec;
    ec.T = o.T;
    ec.dt = o.dt;
    const EvolutionResult er = evolve_recorded(*r.h, ec);
    const double err = max_abs_diff(er.final(), spectral_shift(*r.h, p.cs * o.T)) / r.h->sup_norm();
    run["translation"] = {{"T", o.T}, {"dt", er.dt}, {"relative_error", err}, {"mass_drift", er.mass_drift()}};
  }
  try {
    run["predicted_type"] = to_string(predicted_wave_type(p.cs, p.g, p.branch));
  } catch (const ParameterError&) {
    run["predicted_type"] = to_string(WaveType::Unclassified);
  }
  if (r.h) {
    const double up = r.h->max() - r.y, down = r.y - r.h->min();
    run["observed"] = {{"polarity", up >= down ? "elevation" : "depression"},
                       {"tail_sign_changes", tail_sign_changes(r)}};
  }
  write_json(prefix + ".json", run);
  print_json(run);
  if (!r.converged) {
    std::cerr << "error: " << r.message << '\n';
    return kNumerical;
  }
  return kOk;
}

int cmd_sweep(const Options& o) {
  const std::string prefix = prefix_or(o, "sweep");
  if (o.steps < 1) throw ParameterError("--steps must be >= 1");
  json run = {{"command", "sweep"}, {"mode", o.mode}};

  if (o.mode == "regions") {
    RegionMapSpec spec;
    spec.cs_min = o.cs;
    spec.cs_max = o.cs_end.value_or(o.cs);
    spec.g_min = o.g;
    spec.g_max = o.g_end.value_or(o.g);
    spec.n_cs = spec.cs_max > spec.cs_min ? o.steps : 1;
    spec.n_g = spec.g_max > spec.g_min ? o.steps : 1;
    spec.branch = parse_branch(o.branch);
    const auto cells = region_map(spec);
    std::ofstream os(prefix + ".csv", std::ios::binary);
    if (!os) throw ParameterError("cannot open '" + prefix + ".csv' for writing");
    os << "# cs,g,valid,region,predicted_type,a,b,delta\n";
    std::map<std::string, int> counts;
    for (const RegionCell& c : cells) {
      os << format_double(c.cs) << ',' << format_double(c.g) << ',' << (c.valid ? 1 : 0) << ','
         << (c.valid ? to_string(c.region) : "none") << ',' << to_string(c.predicted) << ','
         << format_double(c.coefficients.a) << ',' << format_double(c.coefficients.b) << ','
         << format_double(c.coefficients.Delta) << '\n';
      if (c.valid) ++counts[to_string(c.region)];
    }
    run["branch"] = o.branch;
    run["points"] = cells.size();
    run["region_counts"] = counts;
    run["outputs"] = {prefix + ".csv", prefix + ".json"};
    write_json(prefix + ".json", run);
    print_json(run);
    return kOk;
  }
  if (o.mode != "continuation") throw ParameterError("--mode must be 'continuation' or 'regions'");

  const Branch br = parse_branch(o.branch);
  const double g_end = o.g_end.value_or(o.g);
  std::vector<WaveParameters> path;
  for (int i = 0; i < o.steps; ++i) {
    const double t = o.steps == 1 ? 0.0 : static_cast<double>(i) / (o.steps - 1);
    path.push_back({o.cs, o.g + (g_end - o.g) * t, br});
  }
  const SolverConfig cfg = solver_config(o);
  const auto results = o.independent ? solve_batch(path, cfg) : continuation_sweep(path, cfg);

  std::ofstream os(prefix + ".csv", std::ios::binary);
  if (!os) throw ParameterError("cannot open '" + prefix + ".csv' for writing");
  os << "# cs,g,converged,iterations,residual_nonlocal,h_max_minus_y,h_min_minus_y,tail_sign_changes,predicted_type\n";
  int failures = 0;
  json pts = json::array();
  for (const ProfileResult& r : results) {
    std::string pred = to_string(WaveType::Unclassified);
    try {
      pred = to_string(predicted_wave_type(r.parameters.cs, r.parameters.g, r.parameters.branch));
    } catch (const ParameterError&) {
    }
    const double hmax = r.h ? r.h->max() - r.y : NAN, hmin = r.h ? r.h->min() - r.y : NAN;
    os << format_double(r.parameters.cs) << ',' << format_double(r.parameters.g) << ','
       << (r.converged ? 1 : 0) << ',' << r.iterations << ',' << format_double(r.residual_nonlocal)
       << ',' << format_double(hmax) << ',' << format_double(hmin) << ',' << tail_sign_changes(r)
       << ',' << pred << '\n';
    if (!r.converged) ++failures;
    pts.push_back({{"g", r.parameters.g}, {"converged", r.converged}, {"message", r.message}});
  }
  run["branch"] = o.branch;
  run["seeded"] = !o.independent;
  run["points"] = pts;
  run["failures"] = failures;
  run["outputs"] = {prefix + ".csv", prefix + ".json"};
  write_json(prefix + ".json", run);
  print_json(run);
  return kOk;
}

int cmd_phase(const Options& o) {
  const WaveParameters p{o.cs, o.g, parse_branch(o.branch)};
  const ProfileSystem sys = parse_system(o.system);
  if (!(o.zmax > 0)) throw ParameterError("--zmax must be positive");
  if (!(o.eps >= 0)) throw ParameterError("--eps must be >= 0");
  require_branch(p);
  StepControl ctl;
  ctl.output_points = o.output_points;
  const ShootResult s = shoot_unstable(p, o.eps, o.zmax, ctl, sys);
  const std::string prefix = prefix_or(o, "trajectory");
  write_trajectory_csv(prefix + ".csv", s.trajectory, p.cs);
  json run = {{"command", "phase"},
              {"parameters", {{"cs", p.cs}, {"g", p.g}, {"branch", o.branch}, {"eps", o.eps}, {"zmax", o.zmax}}},
              {"system", to_string(sys)},
              {"result", shoot_json(s)},
              {"outputs", {prefix + ".csv", prefix + ".json"}}};
  write_json(prefix + ".json", run);
  print_json(run);
  if (!s.note.empty()) std::cerr << "warning: " << s.note << '\n';
  return kOk;
}

int cmd_evolve(const Options& o) {
  const WaveParameters p{o.cs, o.g, parse_branch(o.branch)};
  if (!(o.T >= 0)) throw ParameterError("--T must be >= 0");
  if (o.dt && !(*o.dt > 0)) throw ParameterError("--dt must be positive");
  if (o.snapshots < 1) throw ParameterError("--snapshots must be >= 1");
  const SolverConfig cfg = solver_config(o);
  require_branch(p);
  const ProfileResult r = solve_profile(p, cfg);

  EvolutionConfig ec;
  ec.T = o.T;
  ec.dt = o.dt;
  ec.form = parse_form(o.form);
  ec.dealias = !o.no_dealias;
  const double dt = ec.dt.value_or(auto_time_step(*r.h));
  const long steps = static_cast<long>(std::ceil(ec.T / dt - 1e-9));
  ec.snapshot_every = std::max(1L, steps / o.snapshots);
  const EvolutionResult er = evolve_recorded(*r.h, ec);

  const std::string prefix = prefix_or(o, "evolution");
  write_snapshots_csv(prefix + ".csv", er);
  json summary = evolution_json(er, ec);
  summary["translation_error"] =
      max_abs_diff(er.final(), spectral_shift(*r.h, p.cs * ec.T)) / r.h->sup_norm();
  json run = {{"command", "evolve"},
              {"parameters", {{"cs", p.cs}, {"g", p.g}, {"branch", o.branch}}},
              {"profile_residual", r.residual_nonlocal},
              {"evolution", summary},
              {"outputs", {prefix + ".csv", prefix + ".json"}}};
  write_json(prefix + ".json", run);
  print_json(run);
  return kOk;
}

int cmd_dispersion(const Options& o) {
  if (o.kmax < 1) throw ParameterError("--kmax must be >= 1");
  json table = json::object();
  for (int k = 1; k <= o.kmax; ++k) table[std::to_string(k)] = dispersion_speed(k);
  json run = {{"command", "dispersion"}, {"kmax", o.kmax}, {"c_k", table}};
  if (!o.out.empty()) write_json(o.out + ".json", run);
  print_json(run);
  return kOk;
}

int cmd_branch(const Options& o) {
  const BranchResult b = small_amplitude_branch(o.m, o.k, o.amp);
  const std::string prefix = prefix_or(o, "branch");
  std::ofstream os(prefix + ".csv", std::ios::binary);
  if (!os) throw ParameterError("cannot open '" + prefix + ".csv' for writing");
  os << "# x,phi\n";
  const RealPeriodicField& phi = *b.phi;
  for (int j = 0; j < phi.size(); ++j)
    os << format_double(phi.grid().node(j)) << ',' << format_double(phi[j]) << '\n';
  const double cmk = dispersion_speed(o.m * o.k);
  json run = {{"command", "branch"},
              {"m", o.m},
              {"k", o.k},
              {"amp", o.amp},
              {"c", b.c},
              {"c_mk", cmk},
              {"c_minus_c_mk", b.c - cmk},
              {"newton_iterations", b.newton_iterations},
              {"residual", b.residual},
              {"N", phi.size()},
              {"outputs", {prefix + ".csv", prefix + ".json"}}};
  write_json(prefix + ".json", run);
  print_json(run);
  return kOk;
}

// Config keys become `--key value` arguments unless the key was given on the
// command line. Keys the subcommand does not know are ignored.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App& app) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.size() < 2) return args;
  CLI::App* sub = nullptr;
  for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; }))
    if (s->get_name() == args[1]) sub = s;
  if (!sub) return args;

  std::vector<std::string> merged = args;
  for (const auto& [key, value] : read_config(path)) {
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (given || key == "config") continue;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (!opt) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1" || value == "yes") merged.push_back(flag);
    } else {
      merged.push_back(flag);
      merged.push_back(value);
    }
  }
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traveling-wave profiles, equilibria and time evolution for a nonlocal wave equation"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--config", o.config, "flat key = value file; flags given here take precedence");
    s->add_option("--out", o.out, "output path prefix");
  };
  auto add_wave = [&](CLI::App* s, bool with_branch) {
    s->add_option("--cs", o.cs, "wave speed c_s > 0")->check(CLI::PositiveNumber);
    s->add_option("--g", o.g, "integration constant g");
    if (with_branch)
      s->add_option("--branch", o.branch, "equilibrium branch")->check(CLI::IsMember({"plus", "minus"}));
  };
  auto add_solver = [&](CLI::App* s) {
    s->add_option("--N", o.N, "grid points (even, >= 8)");
    s->add_option("--l", o.l, "half-period of the computational domain")->check(CLI::PositiveNumber);
    s->add_option("--tol", o.tol, "increment tolerance")->check(CLI::PositiveNumber);
    s->add_option("--max-iter", o.max_iter, "iteration limit")->check(CLI::PositiveNumber);
    s->add_option("--accel", o.accel, "vector extrapolation")->check(CLI::IsMember({"none", "mpe", "rre"}));
    s->add_option("--init", o.init, "starting profile CSV (same grid)");
  };
  auto add_system = [&](CLI::App* s) {
    s->add_option("--system", o.system, "fourth-equation form")->check(CLI::IsMember({"derived", "printed"}));
  };

  CLI::App* classify = app.add_subcommand("classify", "equilibria, coefficients, regions and predicted wave types");
  add_wave(classify, false);
  add_system(classify);
  add_common(classify);

  CLI::App* solve = app.add_subcommand("solve", "compute a traveling-wave profile");
  add_wave(solve, true);
  add_solver(solve);
  add_common(solve);
  solve->add_flag("--translate", o.translate, "evolve the profile to T and report the translation error");
  solve->add_option("--T", o.T, "final time for --translate")->check(CLI::NonNegativeNumber);
  solve->add_option("--dt", o.dt, "time step for --translate (default: automatic)")->check(CLI::PositiveNumber);

  CLI::App* sweep = app.add_subcommand("sweep", "continuation in g, or a region map over (cs, g)");
  add_wave(sweep, true);
  add_solver(sweep);
  add_common(sweep);
  sweep->add_option("--mode", o.mode, "continuation | regions")->check(CLI::IsMember({"continuation", "regions"}));
  sweep->add_option("--g-end", o.g_end, "last g value");
  sweep->add_option("--cs-end", o.cs_end, "last cs value (regions mode)")->check(CLI::PositiveNumber);
  sweep->add_option("--steps", o.steps, "points per axis")->check(CLI::PositiveNumber);
  sweep->add_flag("--independent", o.independent, "solve points independently and in parallel");

  CLI::App* phase = app.add_subcommand("phase", "shoot along the unstable manifold of a branch equilibrium");
  add_wave(phase, true);
  add_system(phase);
  add_common(phase);
  phase->add_option("--eps", o.eps, "initial offset along the unstable eigenvector");
  phase->add_option("--zmax", o.zmax, "integration length in Z");
  phase->add_option("--points", o.output_points, "uniform output samples")->check(CLI::NonNegativeNumber);

  CLI::App* evolve = app.add_subcommand("evolve", "solve a profile, then evolve it in time");
  add_wave(evolve, true);
  add_solver(evolve);
  add_common(evolve);
  evolve->add_option("--T", o.T, "final time");
  evolve->add_option("--dt", o.dt, "time step (default: automatic)");
  evolve->add_option("--form", o.form, "right-hand side form")->check(CLI::IsMember({"nonconservative", "conservative"}));
  evolve->add_flag("--no-dealias", o.no_dealias, "disable 2/3-rule dealiasing");
  evolve->add_option("--snapshots", o.snapshots, "number of recorded snapshots");

  CLI::App* dispersion = app.add_subcommand("dispersion", "linear speeds c_k");
  dispersion->add_option("--kmax", o.kmax, "largest k");
  add_common(dispersion);

  CLI::App* branch = app.add_subcommand("branch", "small-amplitude m-fold periodic wave");
  branch->add_option("--m", o.m, "symmetry order m >= 1");
  branch->add_option("--k", o.k, "base wavenumber k >= 1");
  branch->add_option("--amp", o.amp, "amplitude s, |s| <= 0.05");
  add_common(branch);

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = merge_config(args, app);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);

  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*solve) return cmd_solve(o);
    if (*sweep) return cmd_sweep(o);
    if (*phase) return cmd_phase(o);
    if (*evolve) return cmd_evolve(o);
    if (*dispersion) return cmd_dispersion(o);
    if (*branch) return cmd_branch(o);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
