#pragma once

#include "pasa/phase_two.hpp"

namespace pasa {

enum class Phase { one, two };
enum class Branch { none, one_to_two, two_to_one };
enum class Status { converged, max_iter, infeasible, line_search_failure };

/// One row per iterate: the measures at the iterate, the theta in effect
/// for its branch test, the step taken, and any branch event.
struct IterateRecord {
  int iter = 0;
  Phase phase = Phase::one;
  double f = 0.0;
  double E = 0.0;
  double e = 0.0;
  double theta = 0.0;
  double step = 0.0;
  int n_active = 0;
  int n_undecided = 0;
  Branch branch = Branch::none;
};

struct SolveResult {
  Vector x;
  double f = 0.0;
  double E = 0.0;
  Status status = Status::converged;
  std::vector<IterateRecord> trace;
  /// Iterates, one per trace row. Used by the diagnostics module.
  std::vector<Vector> points;
};

const char* to_string(Status status);

/// The two-phase active set driver: project x0 onto the polyhedron, then
/// alternate gradient projection (phase one) and the face-restricted
/// optimizer (phase two) under the e >= theta E branch test, decaying theta
/// in phase one whenever the undecided set is empty, until E <= eps.
SolveResult solve(const Objective& obj, const Polyhedron& poly, const Vector& x0,
                  const PasaParams& params = {});

}  // namespace pasa
