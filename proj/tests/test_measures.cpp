#include <doctest.h>

#include <cmath>
#include <random>

#include "pasa/measures.hpp"
#include "pasa/problems.hpp"
#include "test_support.hpp"

using namespace pasa;
using namespace pasa::testing;

TEST_SUITE("measures") {

TEST_CASE("stepped point on the box QP") {
  Objective obj = boxqp_objective();
  Polyhedron p = box2();

  // stationary point is a fixed point for every alpha
  for (double alpha : {0.1, 1.0, 10.0})
    CHECK((step_point(obj, p, vec2(1, 1), alpha).point - vec2(1, 1)).norm() < 1e-12);

  CHECK((step_point(obj, p, vec2(0, 0), 1.0).point - vec2(1, 1)).norm() < 1e-12);

  auto zero = step_point(obj, p, vec2(0.3, 0.7), 0.0);
  CHECK((zero.point - vec2(0.3, 0.7)).norm() == 0.0);
  CHECK(zero.multipliers.norm() == 0.0);
}

TEST_CASE("search direction") {
  Objective obj = boxqp_objective();
  Polyhedron p = box2();
  CHECK((direction(obj, p, vec2(0, 0), 1.0) - vec2(1, 1)).norm() < 1e-12);
  CHECK(direction(obj, p, vec2(1, 1), 1.0).norm() < 1e-12);

  Objective half = quadratic_objective(Matrix::Identity(2, 2), Vector::Zero(2));
  CHECK((direction(half, Polyhedron::all_of(2), vec2(1, 0), 1.0) - vec2(-1, 0)).norm() < 1e-12);
}

TEST_CASE("global measure") {
  Objective obj = boxqp_objective();
  Polyhedron p = box2();
  CHECK(global_error(obj, p, vec2(1, 1)) < 1e-12);
  CHECK(global_error(obj, p, vec2(0, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // unconstrained: E(x) = ||g(x)||
  Objective half = quadratic_objective(Matrix::Identity(2, 2), Vector::Zero(2));
  Polyhedron free2 = Polyhedron::all_of(2);
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    Vector x = random_vector(rng, 2);
    CHECK(global_error(half, free2, x) ==
          doctest::Approx(half.gradient(x).norm()).epsilon(1e-12));
  }
}

TEST_CASE("local measure") {
  Objective obj = boxqp_objective();
  Polyhedron p = box2();
  CHECK(local_error(obj, p, vec2(1, 0.5)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(local_error(obj, p, vec2(1, 1)) < 1e-12);
  CHECK(local_error(obj, p, vec2(0.3, 0.7)) ==
        doctest::Approx(obj.gradient(vec2(0.3, 0.7)).norm()).epsilon(1e-12));
}

TEST_CASE("undecided set thresholds") {
  Vector lambda(1), slack(1);
  lambda << 0.5;
  slack << 0.01;
  // E = 0.04: thresholds E^0.5 = 0.2 and E^1.5 = 0.008
  CHECK(undecided_from(lambda, slack, 0.04, 0.5, 1.5) == IndexSet{0});

  Vector zero = Vector::Zero(3);
  Vector bigslack = Vector::Constant(3, 1.0);
  CHECK(undecided_from(zero, bigslack, 0.04, 0.5, 1.5).empty());

  Vector lam(3);
  lam << 1, 1, 1;
  CHECK(undecided_from(lam, Vector::Zero(3), 0.04, 0.5, 1.5).empty());
  CHECK(undecided_from(lam, bigslack, 0.0, 0.5, 1.5).empty());  // E = 0
}

TEST_CASE("E vanishes exactly at KKT points") {
  for (const TestProblem& tp : degenerate_qp_suite()) {
    CHECK(global_error(tp.objective, tp.polyhedron, tp.solution.x_star) <= 1e-8);
  }
  // and not at non-stationary points
  Objective obj = boxqp_objective();
  Polyhedron p = box2();
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    Vector x = project(p, random_vector(rng, 2)).point;
    double E = global_error(obj, p, x);
    double kkt = kkt_residual(obj, p, x, step_point(obj, p, x, 1.0).multipliers);
    if (E <= 1e-8) {
      CHECK(kkt <= 1e-6);
    } else {
      CHECK(kkt > 1e-10);
    }
  }
}

TEST_CASE("descent and scale inequalities for the direction") {
  std::mt19937 rng(31);
  Matrix q = random_spd(rng, 3);
  Vector c = random_vector(rng, 3);
  Objective obj = quadratic_objective(q, c);
  for (int trial = 0; trial < 100; ++trial) {
    auto [poly, interior] = random_polyhedron(rng, 3, 6);
    ProjectOptions opt;
    opt.anchor = interior;
    Vector x = project(poly, random_vector(rng, 3), opt).point;
    Vector g = obj.gradient(x);
    Vector d1 = direction(obj, poly, x, 1.0, opt);
    for (double alpha : {0.1, 1.0, 10.0}) {
      Vector d = direction(obj, poly, x, alpha, opt);
      CHECK(g.dot(d) <= -d.squaredNorm() / alpha + 1e-10);
      CHECK(d.norm() >= std::min(alpha, 1.0) * d1.norm() - 1e-10);
    }
  }
}

TEST_CASE("Lipschitz bound for the direction on quadratics") {
  std::mt19937 rng(37);
  Matrix q = random_spd(rng, 3);
  Vector c = random_vector(rng, 3);
  Objective obj = quadratic_objective(q, c);
  const double kappa = sym_norm(q);
  for (int trial = 0; trial < 100; ++trial) {
    auto [poly, interior] = random_polyhedron(rng, 3, 6);
    ProjectOptions opt;
    opt.anchor = interior;
    Vector x1 = project(poly, random_vector(rng, 3), opt).point;
    Vector x2 = project(poly, random_vector(rng, 3), opt).point;
    for (double alpha : {0.1, 1.0, 10.0}) {
      Vector d1 = direction(obj, poly, x1, alpha, opt);
      Vector d2 = direction(obj, poly, x2, alpha, opt);
      CHECK((d1 - d2).norm() <= (2.0 + alpha * kappa) * (x1 - x2).norm() + 1e-8);
    }
  }
}

TEST_CASE("snapshot agrees with the piecewise computations") {
  Objective obj = boxqp_objective();
  Polyhedron p = box2();
  std::mt19937 rng(41);
  for (int t = 0; t < 20; ++t) {
    Vector x = project(p, random_vector(rng, 2)).point;
    auto snap = make_snapshot(obj, p, x, 0.5, 1.5);
    CHECK(snap.E == doctest::Approx(global_error(obj, p, x)).epsilon(1e-14));
    CHECK(snap.e == doctest::Approx(local_error(obj, p, x)).epsilon(1e-14));
    CHECK(snap.active == active_set(p, x));
    CHECK(snap.undecided == undecided_set(obj, p, x, 0.5, 1.5));
  }
}

}  // TEST_SUITE
