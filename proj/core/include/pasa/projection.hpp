#pragma once

#include <optional>

#include "pasa/polyhedron.hpp"

namespace pasa {

/// Euclidean projection together with the KKT certificate of the
/// least-distance problem: point = argmin ||z - y|| over the feasible set,
/// multipliers satisfy point - z + A^T lambda = 0 with lambda >= 0 on
/// inequality rows and lambda_i = 0 on rows free at the point.
struct ProjectionResult {
  Vector point;
  Vector multipliers;       // length m, min-norm element when non-unique
  IndexSet active_at_point;
  int iterations = 0;       // working-set changes spent by the solver
  double kkt_residual = 0.0;
};

struct ProjectOptions {
  double act_tol = kDefaultActTol;
  double feas_tol = kDefaultFeasTol;
  /// Working-set change cap is max_changes_factor * (m + 1).
  int max_changes_factor = 50;
  /// Known feasible point used to seed the solver when z is infeasible.
  std::optional<Vector> anchor;
};

/// Project z onto the polyhedron. Throws InfeasibleError when the feasible
/// set appears empty and NoConvergenceError on working-set cap overflow.
ProjectionResult project(const Polyhedron& poly, const Vector& z,
                         const ProjectOptions& options = {});

/// Project z onto a face; the face's equality rows are held active
/// throughout and their multipliers are sign-unconstrained.
ProjectionResult project_face(const Face& face, const Vector& z,
                              const ProjectOptions& options = {});

/// g^I: projection of the gradient onto the null space of the rows in
/// `active`. Empty active set returns g unchanged.
Vector null_gradient(const Polyhedron& poly, const IndexSet& active, const Vector& g);

}  // namespace pasa
