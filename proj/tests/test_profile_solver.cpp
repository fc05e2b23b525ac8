#include <cmath>
#include <cstdio>
#include <numbers>

#include "doctest.h"
#include "twave/errors.hpp"
#include "twave/io.hpp"
#include "twave/phase_portrait.hpp"
#include "twave/profile_solver.hpp"

using namespace twave;

namespace {

// Smooth depression wave with an oscillatory tail (Table-1 NMTW regime).
WaveParameters nmtw() { return {1.0, thresholds(1.0).g1_star - 0.001, Branch::Plus}; }

const ProfileResult& nmtw_solution() {
  static const ProfileResult r = solve_profile(nmtw(), SolverConfig{});
  return r;
}

double f_derived(double y1, double y2, double y3, double y4, double c) {
  return -(c + 1) * y1 + (2 * c + 1.5) * y3 + 0.75 * y1 * y1 - 2.5 * y1 * y3 - 1.25 * y2 * y2 +
         3 * y2 * y4 + 2.25 * y3 * y3 - 1.5 * y4 * y4;
}

}  // namespace

TEST_CASE("config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.tol_increment = 0;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c = SolverConfig{};
  c.max_iter = 0;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c = SolverConfig{};
  c.cycle_width = 1;
  CHECK_THROWS_AS(c.validate(), ParameterError);
}

TEST_CASE("linear symbol and quadratic map") {
  const Grid g = make_grid(256, 20.0);
  const FixedPointOperators ops = fixedpoint_operators({1.0, 0.0, Branch::Minus}, g);
  CHECK(ops.symbol()[0].real() == doctest::Approx(-2.0));
  CHECK(ops.alpha() == doctest::Approx(-1.5));
  CHECK(ops.nonlinear(RealPeriodicField::zeros(g)).sup_norm() == 0.0);
  for (int m = 0; m < 129; ++m) {
    const double k = g.half_wavenumber(m), t = 1 + k * k;
    CHECK(ops.symbol()[m].real() == doctest::Approx(-1.5 * t * t - 0.5 * t).epsilon(1e-14));
  }
}

// L u - N(u) against alpha(Y) u'''' + g + F(Y), Y = (y + u, u', u'', u'''),
// with the derivatives of a Gaussian written out by hand.
TEST_CASE("fixed-point splitting reproduces the local profile equation") {
  const Grid grid = make_grid(512, 30.0);
  const double s = 0.4, amp = 0.3;
  for (const WaveParameters p : {WaveParameters{1.0, 0.0, Branch::Minus}, nmtw(),
                                 WaveParameters{2.5, -1.0, Branch::Plus}}) {
    const FixedPointOperators ops = fixedpoint_operators(p, grid);
    const double y = ops.y();
    const auto u = RealPeriodicField::from_function(grid, [&](double x) { return amp * std::exp(-s * x * x); });
    const RealPeriodicField lhs = ops.linear(u) - ops.nonlinear(u);
    std::vector<double> expect(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
      const double x = grid.node(j), e = amp * std::exp(-s * x * x);
      const double d1 = -2 * s * x * e;
      const double d2 = (4 * s * s * x * x - 2 * s) * e;
      const double d3 = (-8 * s * s * s * x * x * x + 12 * s * s * x) * e;
      const double d4 = (16 * std::pow(s, 4) * std::pow(x, 4) - 48 * s * s * s * x * x + 12 * s * s) * e;
      const double y1 = y + e;
      const double a = 1.5 * (y1 - d2) - (p.cs + 0.5);
      expect[j] = a * d4 + p.g + f_derived(y1, d1, d2, d3, p.cs);
    }
    CHECK(max_abs_diff(lhs, RealPeriodicField(grid, expect)) <= 1e-9);
  }
}

TEST_CASE("resonant wavenumber on the grid") {
  // minus branch with alpha > 0: Lambda changes sign at some k*
  const WaveParameters p{1.0, 1.3, Branch::Minus};
  const double y = branch_root(p), a = coefficients(p).alpha;
  REQUIRE(a > 0);
  // a t^2 - (y/2 + 1/2) t + y/2 = 0 with t = 1 + k^2
  const double B = 0.5 * y + 0.5, disc = B * B - 2 * a * y;
  REQUIRE(disc > 0);
  const double t = (B + std::sqrt(disc)) / (2 * a);
  REQUIRE(t > 1);
  const double kstar = std::sqrt(t - 1);
  const Grid grid = make_grid(64, 10 * std::numbers::pi / kstar);
  CHECK_THROWS_WITH_AS(fixedpoint_operators(p, grid), doctest::Contains("near-singular"), NumericalError);
  CHECK_THROWS_AS(fixedpoint_operators({1.0, 2.0, Branch::Minus}, grid), ParameterError);
}

TEST_CASE("Petviashvili step guards") {
  const Grid g = make_grid(128, 20.0);
  const FixedPointOperators ops = fixedpoint_operators(nmtw(), g);
  CHECK_THROWS_WITH_AS(petviashvili_step(RealPeriodicField::zeros(g), ops, 2.0),
                       doctest::Contains("degenerate iterate"), NumericalError);
}

TEST_CASE("converged profile is a fixed point with m = 1") {
  const ProfileResult& r = nmtw_solution();
  const FixedPointOperators ops = fixedpoint_operators(nmtw(), SolverConfig{}.grid);
  const StepResult s = petviashvili_step(*r.u_tilde, ops, 2.0);
  CHECK(std::abs(s.m - 1) < 1e-8);
  CHECK(max_abs_diff(s.next, *r.u_tilde) < 1e-10);
}

TEST_CASE("residual of constant states") {
  const Grid g = make_grid(64, 10.0);
  for (double cs : {0.3, 1.0, 4.0}) {
    const double g0 = 0.7 * thresholds(cs).g1;
    const auto roots = branch_roots(cs, g0);
    for (double y : {roots.y_plus, roots.y_minus})
      CHECK(residual_nonlocal(RealPeriodicField::constant(g, y), {cs, g0, Branch::Plus}) <= 1e-12);
    CHECK(residual_nonlocal(RealPeriodicField::zeros(g), {cs, 0.0, Branch::Plus}) == 0.0);
  }
}

TEST_CASE("depression wave with an oscillatory tail") {
  const ProfileResult& r = nmtw_solution();
  REQUIRE(r.converged);
  CHECK(r.residual_nonlocal < 1e-10);
  CHECK(std::abs(r.m_history.back() - 1) < 1e-8);
  const RealPeriodicField& u = *r.u_tilde;
  CHECK(max_abs_diff(u, u.reflected()) <= 1e-8 * u.sup_norm());
  CHECK(r.y - r.h->min() > r.h->max() - r.y);
  CHECK(tail_sign_changes(r) >= 2);
  CHECK(max_abs_diff(*r.u, u + r.y) <= 1e-15);
  CHECK(max_abs_diff(*r.h, apply_J(*r.u)) <= 1e-12);
  // extremum at the centre
  const auto v = evaluate_interpolant(*r.h, 0.0, 1);
  CHECK(std::abs(v[1]) <= 1e-8);
}

TEST_CASE("grid and domain independence") {
  const ProfileResult& coarse = nmtw_solution();
  SolverConfig fine;
  fine.grid = make_grid(2048, 100.0);
  const ProfileResult f = solve_profile(nmtw(), fine);
  double diff = 0;
  for (int j = 0; j < 1024; ++j) diff = std::max(diff, std::abs((*f.u_tilde)[2 * j] - (*coarse.u_tilde)[j]));
  CHECK(diff <= 1e-8);

  SolverConfig wide;
  wide.grid = make_grid(1536, 150.0);
  const ProfileResult w = solve_profile(nmtw(), wide);
  CHECK(std::abs(w.u_tilde->min() - coarse.u_tilde->min()) <= 1e-6);
}

TEST_CASE("extrapolation does not slow convergence") {
  SolverConfig plain;
  plain.acceleration = Acceleration::None;
  const ProfileResult none = solve_profile(nmtw(), plain);
  CHECK(nmtw_solution().iterations <= none.iterations);
  SolverConfig rre;
  rre.acceleration = Acceleration::RRE;
  const ProfileResult r = solve_profile(nmtw(), rre);
  CHECK(r.iterations <= none.iterations);
  CHECK(max_abs_diff(*r.u_tilde, *nmtw_solution().u_tilde) <= 1e-9);
  CHECK(max_abs_diff(*none.u_tilde, *nmtw_solution().u_tilde) <= 1e-9);
}

TEST_CASE("initial guesses") {
  const Grid g = make_grid(128, 20.0);
  const auto sech = initial_field(SechSquared{}, {1.0, 0.0, Branch::Minus}, g);
  CHECK(sech.max() == doctest::Approx(1.0));
  const auto dep = initial_field(SechSquared{}, nmtw(), g);
  CHECK(dep.min() == doctest::Approx(-1.0));
  const auto gauss = initial_field(Gaussian{0.5, 1.0}, nmtw(), g);
  CHECK(gauss.max() == doctest::Approx(0.5));
  CHECK(max_abs_diff(gauss, gauss.reflected()) == 0.0);
  CHECK_THROWS_AS(initial_field(FromFile{"/nonexistent/profile.csv"}, nmtw(), g), ParameterError);
}

TEST_CASE("restart from a written profile") {
  const ProfileResult& r = nmtw_solution();
  const std::string path = "test_profile_restart.csv";
  write_profile_csv(path, r);
  SolverConfig c;
  c.initial_guess = FromFile{path};
  const ProfileResult again = solve_profile(nmtw(), c);
  CHECK(again.iterations <= 3);
  CHECK(max_abs_diff(*again.h, *r.h) <= 1e-10);
  SolverConfig other;
  other.grid = make_grid(512, 100.0);
  other.initial_guess = FromFile{path};
  CHECK_THROWS_AS(solve_profile(nmtw(), other), ParameterError);
  std::remove(path.c_str());
}

TEST_CASE("failures") {
  CHECK_THROWS_WITH_AS(solve_profile({1.0, 2.0, Branch::Minus}, SolverConfig{}), doctest::Contains("g exceeds g1"),
                       ParameterError);
  SolverConfig c;
  c.max_iter = 3;
  const ProfileResult r = solve_profile_report(nmtw(), c);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
  CHECK(r.message.find("max_iter") != std::string::npos);
  CHECK_THROWS_AS(solve_profile(nmtw(), c), NumericalError);
}

TEST_CASE("continuation") {
  CHECK(continuation_sweep({}, SolverConfig{}).empty());
  const double g1s = thresholds(1.0).g1_star;
  std::vector<WaveParameters> path;
  for (double g : {g1s - 0.001, g1s - 0.002, g1s - 0.003, 1.4}) path.push_back({1.0, g, Branch::Plus});
  const auto rs = continuation_sweep(path, SolverConfig{});
  REQUIRE(rs.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(rs[i].converged);
  // seeding changes the path, not the answer
  const ProfileResult cold = solve_profile(path[2], SolverConfig{});
  CHECK(max_abs_diff(*rs[2].h, *cold.h) <= 1e-9);
  CHECK_FALSE(rs[3].converged);
  CHECK(rs[3].message.find("g exceeds g1") != std::string::npos);
  // amplitude grows away from g1
  CHECK(rs[0].u_tilde->min() > rs[1].u_tilde->min());
  CHECK(rs[1].u_tilde->min() > rs[2].u_tilde->min());
}

TEST_CASE("batch solves are ordered and policy independent") {
  const double g1s = thresholds(1.0).g1_star;
  std::vector<WaveParameters> pts{{1.0, g1s - 0.003, Branch::Plus}, {1.0, 5.0, Branch::Plus}, nmtw()};
  const auto a = solve_batch(pts, SolverConfig{}, ExecPolicy::Serial);
  const auto b = solve_batch(pts, SolverConfig{}, ExecPolicy::Parallel);
  REQUIRE(a.size() == 3);
  REQUIRE(b.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(a[i].parameters.g == pts[i].g);
    CHECK(a[i].converged == b[i].converged);
    if (a[i].converged) CHECK(max_abs_diff(*a[i].h, *b[i].h) == 0.0);
  }
  CHECK_FALSE(a[1].converged);
}

TEST_CASE("profile ODE integration reproduces the profile") {
  const ProfileResult& r = nmtw_solution();
  const auto d = evaluate_interpolant(*r.u_tilde, 0.0, 3);
  const StateVector y0(r.y + d[0], d[1], d[2], d[3]);
  StepControl c;
  c.variable = IndependentVariable::X;
  c.rtol = c.atol = 1e-12;
  const double xmax = 6.0;
  c.output_points = 1000;
  const Trajectory t = integrate_orbit(y0, nmtw(), xmax, c);
  REQUIRE(t.samples.back() == doctest::Approx(xmax));
  double worst = 0;
  for (std::size_t i = 0; i < t.samples.size(); ++i)
    worst = std::max(worst, std::abs(t.states[i][0] - evaluate_interpolant(*r.u, t.samples[i])[0]));
  CHECK(worst <= 1e-5);
}
