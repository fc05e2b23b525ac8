#include <cmath>
#include <random>

#include "doctest.h"
#include "twave/equilibria.hpp"
#include "twave/errors.hpp"
#include "twave/phase_portrait.hpp"

using namespace twave;

namespace {
const WaveParameters standard{1.0, 0.0, Branch::Minus};
const Eigen::Matrix4d S = Eigen::Vector4d(1, -1, 1, -1).asDiagonal();
}  // namespace

TEST_CASE("equilibria of the X and Z fields") {
  const auto r = branch_roots(1.0, 0.0);
  for (ProfileSystem sys : {ProfileSystem::Derived, ProfileSystem::Printed}) {
    for (double y : {r.y_minus, r.y_plus}) {
      CHECK(vector_field_X(StateVector(y, 0, 0, 0), standard, sys).norm() <= 1e-14);
      CHECK(vector_field_Z(StateVector(y, 0, 0, 0), standard, sys).norm() <= 1e-14);
    }
  }
  CHECK(vector_field_Z(StateVector::Zero(), standard).norm() == 0.0);
}

TEST_CASE("the X field is singular on alpha = 0") {
  // y1 - y3 = (2/3)(c + 1/2)
  const StateVector y(1.0 + 1.0, 0.3, 1.0, -0.2);
  CHECK(std::abs(alpha_of(y[0], y[2], 1.0)) <= 1e-15);
  CHECK_THROWS_WITH_AS(vector_field_X(y, standard), doctest::Contains("singularity as alpha = 0"),
                       NumericalError);
  CHECK_NOTHROW(vector_field_Z(y, standard));
}

TEST_CASE("Z field is alpha times the X field") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const StateVector y(u(rng), u(rng), u(rng), u(rng));
    const WaveParameters p{1.0 + 0.5 * u(rng) + 1.0, u(rng), Branch::Minus};
    const double a = alpha_of(y[0], y[2], p.cs);
    if (std::abs(a) < 1e-3) continue;
    for (ProfileSystem sys : {ProfileSystem::Derived, ProfileSystem::Printed})
      CHECK((vector_field_Z(y, p, sys) - a * vector_field_X(y, p, sys)).norm() <=
            1e-12 * (1 + vector_field_Z(y, p, sys).norm()));
  }
}

TEST_CASE("finite-difference Jacobian matches the linearization") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ucs(0.1, 5), ug(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double cs = ucs(rng);
    const double g = thresholds(cs).g1 - 5 * ug(rng);
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const WaveParameters p{cs, g, b};
      const StateVector e(branch_root(p), 0, 0, 0);
      const Eigen::Matrix4d J = jacobian_Z(e, p);
      const Eigen::Matrix4d L = linearization_matrix(cs, g, b);
      CHECK((J - L).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("reversibility of the remainder") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    const StateVector U(u(rng), u(rng), u(rng), u(rng));
    CHECK((S * nonlinear_remainder(U) + nonlinear_remainder(reverse(U))).norm() <= 1e-12);
  }
}

TEST_CASE("linear part plus remainder reproduces the field") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    const WaveParameters p{1.5 + u(rng), u(rng), i % 2 ? Branch::Plus : Branch::Minus};
    const StateVector e(branch_root(p), 0, 0, 0);
    const StateVector U(u(rng), u(rng), u(rng), u(rng));
    const StateVector lhs = vector_field_Z(e + U, p);
    const StateVector rhs = linearization_matrix(p.cs, p.g, p.branch) * U + nonlinear_remainder(U);
    CHECK((lhs - rhs).norm() <= 1e-12 * (1 + lhs.norm()));
  }
}

TEST_CASE("integrating from an equilibrium stays there") {
  const StateVector e(0, 0, 0, 0);
  const Trajectory t = integrate_orbit(e, standard, 10.0);
  CHECK(t.termination == Termination::TimeLimit);
  for (const auto& y : t.states) CHECK(y.norm() == 0.0);
  CHECK(t.samples.back() == doctest::Approx(10.0));
}

TEST_CASE("samples increase and dense output has the requested size") {
  StepControl c;
  c.output_points = 100;
  const Trajectory t = integrate_orbit(StateVector(1e-3, 0, 0, 0), standard, 2.0, c);
  CHECK(t.samples.size() == 101);
  for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i] > t.samples[i - 1]);
  CHECK_THROWS_AS(integrate_orbit(StateVector::Zero(), standard, -1.0), ParameterError);
}

TEST_CASE("trajectory reversibility") {
  // S Y(-Z) solves the same system: run forward, reflect, run forward again
  const StateVector e(0, 0, 0, 0);
  const StateVector y0 = e + StateVector(1e-3, 2e-3, -1e-3, 5e-4);
  const double zmax = 3.0;
  StepControl c;
  c.rtol = c.atol = 1e-12;
  const Trajectory fwd = integrate_orbit(y0, standard, zmax, c);
  const Trajectory back = integrate_orbit(reverse(fwd.states.back()), standard, zmax, c);
  CHECK((reverse(back.states.back()) - y0).norm() <= 1e-6);
}

TEST_CASE("catalog members are fixed points of the Z field") {
  for (double cs : {0.2, 1.0, 3.5}) {
    const Thresholds t = thresholds(cs);
    for (double g : {t.g1 - 1.0, t.g1, 0.5 * (t.g1 + t.g2), t.g2, t.g2 + 1.0}) {
      for (ProfileSystem sys : {ProfileSystem::Printed, ProfileSystem::Derived}) {
        const auto cat = equilibria_catalog(cs, g, sys);
        for (const auto& y : cat.all_states(50)) {
          const WaveParameters p{cs, g, Branch::Minus};
          CHECK(vector_field_Z(y, p, sys).norm() <= 1e-10 * (1 + y.squaredNorm()));
        }
      }
    }
  }
}

TEST_CASE("shooting from the standard point") {
  StepControl c;
  c.output_points = 200;
  const ShootResult s = shoot_unstable(standard, 1e-5, 5.0, c);
  CHECK(s.eigenvalue.real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(s.direction.norm() == doctest::Approx(1.0));
  CHECK(s.direction[0] > 0);
  CHECK((s.trajectory.states.front() - (s.equilibrium + 1e-5 * s.direction)).norm() <= 1e-15);
  // leaves the equilibrium along the unstable direction
  CHECK((s.trajectory.states.back() - s.equilibrium).norm() > 1e-3);
}

TEST_CASE("shooting with eps = 0 is degenerate") {
  const ShootResult s = shoot_unstable(standard, 0.0, 1.0);
  CHECK(s.outcome == ShootOutcome::Degenerate);
  CHECK_FALSE(s.note.empty());
  for (const auto& y : s.trajectory.states) CHECK((y - s.equilibrium).norm() == 0.0);
}

TEST_CASE("no unstable manifold in region 4") {
  const double g = thresholds(1.0).g1 - 1e-6;
  REQUIRE(make_report({1.0, g, Branch::Plus}).region == Region::R4);
  CHECK_THROWS_WITH_AS(shoot_unstable({1.0, g, Branch::Plus}, 1e-5, 1.0),
                       doctest::Contains("no unstable manifold"), NumericalError);
}

TEST_CASE("alpha = 0 is invariant under the Z flow") {
  // d alpha / dZ = 3/2 alpha (y2 - y4), so alpha keeps its sign
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int i = 0; i < 20; ++i) {
    const StateVector y0(1.0 + u(rng), u(rng), u(rng), u(rng));
    StepControl c;
    c.blowup_norm = 1e4;
    const Trajectory t = integrate_orbit(y0, standard, 2.0, c);
    CHECK(t.alpha_crossings.empty());
    const double a0 = alpha_of(y0[0], y0[2], standard.cs);
    for (const auto& y : t.states) CHECK(alpha_of(y[0], y[2], standard.cs) * a0 > 0);
  }
}
