#pragma once

#include "pasa/problems.hpp"

namespace pasa {

/// Per-iterate quantities measured against a known solution. Entries with
/// an undefined denominator (iterate at x_star, or E = 0) are skipped, so
/// the ratio vectors can be shorter than the input sequence.
struct RunDiagnostics {
  std::vector<double> distance;     // ||x_k - x_star||
  std::vector<double> anchor_gap;   // ||x_k - anchor(x_k)||
  std::vector<double> gap_ratio;    // anchor_gap / distance^2
  std::vector<double> bound_ratio;  // distance / E(x_k)
  int skipped = 0;

  /// Max of the gap ratios over the whole run and over its first half.
  double gap_ratio_max() const;
  double gap_ratio_first_half_max() const;
  /// The running max stabilized: it grew by less than `rel` during the
  /// second half of the run.
  bool gap_ratio_stabilized(double rel = 0.01) const;
};

/// Closest point to x on the affine subspace where the rows in
/// plus_set and the rows active at x all hold with equality. Throws
/// std::runtime_error when that system is inconsistent.
Vector face_anchor(const Polyhedron& poly, const Vector& x, const IndexSet& plus_set,
                   double act_tol = kDefaultActTol);

/// Evaluate the identification and error-bound ratios along a recorded run.
RunDiagnostics lemma_ratios(const std::vector<Vector>& trace_points, const KnownSolution& sol,
                            const Objective& obj, const Polyhedron& poly);

}  // namespace pasa
