#pragma once

#include <string>

#include "pasa/objective.hpp"
#include "pasa/projection.hpp"

namespace pasa {

/// A certified stationary point: the KKT residual of (x_star, multipliers)
/// is at most 1e-10 and active_plus collects the active rows with strictly
/// positive multiplier.
struct KnownSolution {
  Vector x_star;
  Vector multipliers;
  IndexSet active_plus;
  bool degenerate = false;
  std::optional<double> curvature;  // strong second-order constant, when known
};

struct TestProblem {
  std::string name;
  Objective objective;
  Polyhedron polyhedron;
  KnownSolution solution;
};

/// f(x) = 0.5 x^T Q x + c^T x with analytic gradient Q x + c. Q must be
/// symmetric to 1e-12.
Objective quadratic_objective(const Matrix& q, const Vector& c);

/// The chained Rosenbrock function in dimension n >= 2.
Objective rosenbrock_objective(int n);

/// Exhaustive-subset projection oracle (2^m equality systems); requires
/// m <= 12 and n <= 6.
ProjectionResult brute_force_project(const Polyhedron& poly, const Vector& z);

/// Built-in box QPs with hand-checked solutions: (a) nondegenerate,
/// (b) degenerate with a zero multiplier on an active row, (c) a degenerate
/// 3-D instance with linearly independent active gradients.
std::vector<TestProblem> degenerate_qp_suite();

/// KKT residual of (x, lambda) for min f over the polyhedron: stationarity,
/// feasibility, multiplier sign, and complementarity combined.
double kkt_residual(const Objective& obj, const Polyhedron& poly, const Vector& x,
                    const Vector& lambda);

/// Max relative gradient error against central finite differences at x.
double gradient_check(const Objective& obj, const Vector& x, double h = 1e-6);

}  // namespace pasa
