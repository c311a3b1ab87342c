#pragma once

#include "pasa/objective.hpp"
#include "pasa/projection.hpp"

namespace pasa {

/// Everything the branching logic needs at one iterate, computed from a
/// single unit-step projection: the global measure E, the local measure e,
/// the multiplier of the alpha = 1 projection, and the undecided set.
struct StationaritySnapshot {
  Vector x;
  double E = 0.0;       // ||y(x, 1) - x||
  double e = 0.0;       // ||g^A(x)||
  Vector lambda;        // multipliers of the alpha = 1 projection
  IndexSet active;      // A(x)
  IndexSet undecided;   // U(x)
};

/// y(x, alpha) = P(x - alpha g(x)) with its multipliers.
ProjectionResult step_point(const Objective& obj, const Polyhedron& poly, const Vector& x,
                            double alpha, const ProjectOptions& options = {});

/// d^alpha(x) = y(x, alpha) - x.
Vector direction(const Objective& obj, const Polyhedron& poly, const Vector& x, double alpha,
                 const ProjectOptions& options = {});

/// E(x) = ||d^1(x)||; zero exactly at stationary points.
double global_error(const Objective& obj, const Polyhedron& poly, const Vector& x,
                    const ProjectOptions& options = {});

/// e(x) = ||g^A(x)||, the gradient projected onto the null space of the
/// active constraint rows.
double local_error(const Objective& obj, const Polyhedron& poly, const Vector& x,
                   double act_tol = kDefaultActTol);

/// U from precomputed pieces: {i : lambda_i >= E^gamma and slack_i >= E^beta}.
/// Empty whenever E = 0.
IndexSet undecided_from(const Vector& lambda, const Vector& slack, double E, double gamma,
                        double beta);

IndexSet undecided_set(const Objective& obj, const Polyhedron& poly, const Vector& x, double gamma,
                       double beta, const ProjectOptions& options = {});

StationaritySnapshot make_snapshot(const Objective& obj, const Polyhedron& poly, const Vector& x,
                                   double gamma, double beta, const ProjectOptions& options = {});

}  // namespace pasa
