#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "twave/errors.hpp"
#include "twave/io.hpp"

using namespace twave;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}
std::string first_line(const std::string& path) {
  std::ifstream is(path);
  std::string line;
  std::getline(is, line);
  return line;
}
const WaveParameters nmtw{1.0, 4.0 / 3 - 0.25 / 75 - 0.001, Branch::Plus};
}  // namespace

TEST_CASE("shortest round-trip formatting") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 10000; ++i) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(u(rng)) % 20);
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1e-300) == "1e-300");
}

TEST_CASE("profile CSV round trip and determinism") {
  const ProfileResult r = solve_profile(nmtw, SolverConfig{});
  write_profile_csv("io_a.csv", r);
  write_profile_csv("io_b.csv", r);
  CHECK(first_line("io_a.csv") == "# x,u,ux,uxx,uxxx,h,htilde");
  CHECK(slurp("io_a.csv") == slurp("io_b.csv"));
  const ProfileTable t = read_profile_csv("io_a.csv");
  REQUIRE(t.x.size() == 1024);
  for (int j = 0; j < 1024; ++j) {
    CHECK(t.u[j] == (*r.u)[j]);
    CHECK(t.h[j] == (*r.h)[j]);
    CHECK(t.x[j] == r.h->grid().node(j));
  }
  const json j = profile_json(r, SolverConfig{});
  CHECK(j["converged"] == true);
  CHECK(j["iterations"] == r.iterations);
  CHECK(j["m_history"].size() == r.m_history.size());
  CHECK(j["solver"]["N"] == 1024);
  CHECK(j["solver"]["acceleration"] == "mpe");
  write_json("io_a.json", j);
  write_json("io_b.json", profile_json(r, SolverConfig{}));
  CHECK(slurp("io_a.json") == slurp("io_b.json"));
  for (const char* f : {"io_a.csv", "io_b.csv", "io_a.json", "io_b.json"}) std::remove(f);
}

TEST_CASE("malformed profile files") {
  {
    std::ofstream os("io_bad.csv");
    os << "# x,u,ux,uxx,uxxx,h,htilde\n1,2,3\n";
  }
  CHECK_THROWS_WITH_AS(read_profile_csv("io_bad.csv"), doctest::Contains("expected 7 columns"), ParameterError);
  {
    std::ofstream os("io_bad.csv");
    os << "1,2,3,4,5,6,x\n";
  }
  CHECK_THROWS_WITH_AS(read_profile_csv("io_bad.csv"), doctest::Contains("bad number"), ParameterError);
  std::remove("io_bad.csv");
  CHECK_THROWS_AS(read_profile_csv("/nonexistent/file.csv"), ParameterError);
}

TEST_CASE("report field names") {
  const json j = report_json(make_report({1.0, 0.0, Branch::Minus}));
  for (const char* k : {"cs", "g", "branch", "y", "alpha", "beta", "gamma", "a", "b", "delta", "S", "eigenvalues",
                        "region", "predicted_type", "thresholds"})
    CHECK(j.contains(k));
  CHECK(j.size() == 15);
  CHECK(j["region"] == "R2");
  CHECK(j["predicted_type"] == "TW_elevation");
  CHECK(j["eigenvalues"].size() == 4);
  CHECK(j["eigenvalues"][0].size() == 2);
  CHECK(j["thresholds"]["g1"].get<double>() == doctest::Approx(4.0 / 3));

  const json c = catalog_json(equilibria_catalog(1.0, 100.0, ProfileSystem::Printed));
  CHECK(c["summary"] == "no equilibria");
  CHECK(c["family"].is_null());
}

TEST_CASE("trajectory and snapshot files") {
  StepControl ctl;
  ctl.output_points = 10;
  const ShootResult s = shoot_unstable({1.0, 0.0, Branch::Minus}, 1e-5, 1.0, ctl);
  write_trajectory_csv("io_t.csv", s.trajectory, 1.0);
  CHECK(first_line("io_t.csv") == "# z,y1,y2,y3,y4,alpha");
  const json j = shoot_json(s);
  CHECK(j["termination"] == "TimeLimit");
  CHECK(j["samples"] == 11);

  const Grid g = make_grid(16, 3.0);
  EvolutionConfig c;
  c.T = 0.1;
  const EvolutionResult e = evolve_recorded(RealPeriodicField::constant(g, 0.2), c);
  write_snapshots_csv("io_s.csv", e);
  CHECK(first_line("io_s.csv") == "# t,x,h");
  const json ej = evolution_json(e, c);
  CHECK(ej["mass_drift"] == 0.0);
  std::remove("io_t.csv");
  std::remove("io_s.csv");
}

TEST_CASE("flat config files") {
  {
    std::ofstream os("io_cfg.txt");
    os << "# comment\n\ncs = 2.5\n  g=  -0.25 \naccel = rre\n";
  }
  const auto kv = read_config("io_cfg.txt");
  CHECK(kv.size() == 3);
  CHECK(kv.at("cs") == "2.5");
  CHECK(kv.at("g") == "-0.25");
  CHECK(kv.at("accel") == "rre");
  {
    std::ofstream os("io_cfg.txt");
    os << "cs 2.5\n";
  }
  CHECK_THROWS_WITH_AS(read_config("io_cfg.txt"), doctest::Contains("expected key = value"), ParameterError);
  std::remove("io_cfg.txt");
}
