#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "twave/equilibria.hpp"
#include "twave/evolution.hpp"
#include "twave/phase_portrait.hpp"
#include "twave/profile_solver.hpp"

namespace twave {

using json = nlohmann::json;

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

struct ProfileTable {
  std::vector<double> x, u, ux, uxx, uxxx, h, htilde;
};

/// `# x,u,ux,uxx,uxxx,h,htilde` followed by N rows.
void write_profile_csv(const std::string& path, const ProfileResult& r);
ProfileTable read_profile_csv(const std::string& path);
json profile_json(const ProfileResult& r, const SolverConfig& config);

/// `# z,y1,y2,y3,y4,alpha` (first column is x for X-form trajectories).
void write_trajectory_csv(const std::string& path, const Trajectory& t, double cs);
json trajectory_json(const Trajectory& t);
json shoot_json(const ShootResult& s);

/// `# t,x,h`, one row per (snapshot, node).
void write_snapshots_csv(const std::string& path, const EvolutionResult& r);
json evolution_json(const EvolutionResult& r, const EvolutionConfig& config);

json thresholds_json(const Thresholds& t);
json report_json(const EquilibriumReport& r);
json catalog_json(const EquilibriumCatalog& c);

void write_json(const std::string& path, const json& j);

/// Flat `key = value` file; blank lines and lines starting with '#' ignored.
std::map<std::string, std::string> read_config(const std::string& path);

}  // namespace twave
