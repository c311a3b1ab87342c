#include <doctest.h>

#include <random>

#include "pasa/problems.hpp"
#include "test_support.hpp"

using namespace pasa;
using namespace pasa::testing;

TEST_SUITE("problems") {

TEST_CASE("quadratic objective values and gradients") {
  Matrix q2 = 2.0 * Matrix::Identity(2, 2);
  Objective a = quadratic_objective(q2, vec2(-4, -4));
  CHECK(a.value(vec2(1, 1)) == doctest::Approx(-6.0).epsilon(1e-14));  // 2 - 8

  Objective b = quadratic_objective(Matrix::Identity(2, 2), Vector::Zero(2));
  CHECK((b.gradient(vec2(0.3, -0.7)) - vec2(0.3, -0.7)).norm() == 0.0);

  Matrix qd = Matrix::Zero(2, 2);
  qd(0, 0) = 1;
  qd(1, 1) = 4;
  Objective c = quadratic_objective(qd, Vector::Zero(2));
  CHECK((c.gradient(vec2(2, 1)) - vec2(2, 4)).norm() == 0.0);
}

TEST_CASE("asymmetric Q is rejected") {
  Matrix q(2, 2);
  q << 1, 2, 0, 1;
  CHECK_THROWS_AS(quadratic_objective(q, Vector::Zero(2)), std::invalid_argument);
}

TEST_CASE("Rosenbrock values and gradients") {
  Objective r2 = rosenbrock_objective(2);
  CHECK(r2.value(vec2(1, 1)) == 0.0);
  CHECK(r2.gradient(vec2(1, 1)).norm() == 0.0);
  CHECK(r2.value(vec2(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((r2.gradient(vec2(0, 0)) - vec2(-2, 0)).norm() < 1e-14);
  CHECK(r2.value(vec2(1, 2)) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK((r2.gradient(vec2(1, 2)) - vec2(-400, 200)).norm() < 1e-12);

  Objective r4 = rosenbrock_objective(4);
  CHECK(r4.value(Vector::Ones(4)) == 0.0);
}

TEST_CASE("exhaustive projection oracle on hand-checked cases") {
  auto hp = brute_force_project(halfplane(), vec2(1, 1));
  CHECK((hp.point - vec2(0.5, 0.5)).norm() < 1e-12);
  CHECK(hp.multipliers[0] == doctest::Approx(0.5).epsilon(1e-12));

  auto interior = brute_force_project(box2(), vec2(0.3, 0.7));
  CHECK((interior.point - vec2(0.3, 0.7)).norm() == 0.0);

  Matrix a(4, 2);
  a << -1, 0, 0, -1, 1, 1, -1, -1;
  Vector b(4);
  b << 0, 0, 1, -1;  // the standard simplex: x >= 0, sum x = 1
  auto simplex = brute_force_project(Polyhedron(a, b), vec2(1, 1));
  CHECK((simplex.point - vec2(0.5, 0.5)).norm() < 1e-12);
}

TEST_CASE("oracle reports infeasibility") {
  Matrix a(2, 1);
  a << 1, -1;
  Vector b(2);
  b << -1, -1;
  CHECK_THROWS_AS(brute_force_project(Polyhedron(a, b), Vector::Zero(1)), InfeasibleError);
}

TEST_CASE("built-in suite carries valid certificates") {
  auto suite = degenerate_qp_suite();
  REQUIRE(suite.size() >= 3);
  for (const TestProblem& tp : suite) {
    CHECK(kkt_residual(tp.objective, tp.polyhedron, tp.solution.x_star, tp.solution.multipliers) <=
          1e-10);
    // active_plus is exactly the active rows with positive multiplier
    IndexSet act = active_set(tp.polyhedron, tp.solution.x_star);
    IndexSet plus;
    for (int i : act)
      if (tp.solution.multipliers[i] > 0) plus.push_back(i);
    CHECK(tp.solution.active_plus == plus);
  }

  const TestProblem& a = suite[0];
  CHECK_FALSE(a.solution.degenerate);
  CHECK((a.solution.x_star - vec2(1, 1)).norm() == 0.0);
  Vector lam_a(4);
  lam_a << 1, 1, 0, 0;
  CHECK((a.solution.multipliers - lam_a).norm() == 0.0);
  CHECK(a.solution.active_plus == IndexSet{0, 1});
  CHECK((a.objective.gradient(vec2(1, 1)) - vec2(-1, -1)).norm() == 0.0);

  const TestProblem& b = suite[1];
  CHECK(b.solution.degenerate);
  CHECK((b.objective.gradient(vec2(1, 1)) - vec2(0, -1)).norm() == 0.0);
  Vector lam_b(4);
  lam_b << 0, 1, 0, 0;
  CHECK((b.solution.multipliers - lam_b).norm() == 0.0);
  // row 0 active with zero multiplier
  CHECK(contains(active_set(b.polyhedron, b.solution.x_star), 0));
  CHECK(b.solution.multipliers[0] == 0.0);

  const TestProblem& c = suite[2];
  CHECK(c.solution.degenerate);
  CHECK(c.objective.dimension == 3);
  // active rows are linearly independent
  IndexSet act = active_set(c.polyhedron, c.solution.x_star);
  Matrix rows = select_rows(c.polyhedron.A(), act);
  CHECK(Eigen::FullPivLU<Matrix>(rows).rank() == static_cast<int>(act.size()));
  // one active row carries a zero multiplier
  bool zero_on_active = false;
  for (int i : act) zero_on_active = zero_on_active || c.solution.multipliers[i] == 0.0;
  CHECK(zero_on_active);
}

TEST_CASE("gradients match finite differences") {
  std::mt19937 rng(71);
  std::vector<Objective> objs;
  objs.push_back(rosenbrock_objective(2));
  objs.push_back(rosenbrock_objective(5));
  objs.push_back(quadratic_objective(random_spd(rng, 4), random_vector(rng, 4)));
  for (const TestProblem& tp : degenerate_qp_suite()) objs.push_back(tp.objective);
  for (const Objective& obj : objs) {
    for (int t = 0; t < 50; ++t) {
      Vector x = random_vector(rng, obj.dimension, -1.5, 1.5);
      CHECK(gradient_check(obj, x) <= 1e-5);
    }
  }
}

TEST_CASE("KKT residual flags each violated condition") {
  Objective obj = boxqp_objective();
  Polyhedron p = box2();
  Vector lam_good(4);
  lam_good << 1, 1, 0, 0;
  CHECK(kkt_residual(obj, p, vec2(1, 1), lam_good) <= 1e-12);
  // wrong point: stationarity fails
  CHECK(kkt_residual(obj, p, vec2(0.5, 0.5), Vector::Zero(4)) > 1e-2);
  // negative multiplier: sign condition fails
  Vector lam_neg(4);
  lam_neg << -1, 1, 0, 0;
  CHECK(kkt_residual(obj, p, vec2(1, 1), lam_neg) > 1e-2);
  // positive multiplier on an inactive row: complementarity fails
  Vector lam_comp(4);
  lam_comp << 1, 1, 0.5, 0;
  CHECK(kkt_residual(obj, p, vec2(1, 1), lam_comp) > 1e-2);
}

}  // TEST_SUITE
