#include "pasa/diagnostics.hpp"

#include <cmath>

#include "pasa/linalg.hpp"
#include "pasa/measures.hpp"

namespace pasa {

double RunDiagnostics::gap_ratio_max() const {
  double m = 0.0;
  for (double r : gap_ratio) m = std::max(m, r);
  return m;
}

double RunDiagnostics::gap_ratio_first_half_max() const {
  double m = 0.0;
  for (std::size_t k = 0; k < (gap_ratio.size() + 1) / 2; ++k) m = std::max(m, gap_ratio[k]);
  return m;
}

bool RunDiagnostics::gap_ratio_stabilized(double rel) const {
  if (gap_ratio.empty()) return true;
  return gap_ratio_max() <= gap_ratio_first_half_max() * (1.0 + rel) + 1e-300;
}

Vector face_anchor(const Polyhedron& poly, const Vector& x, const IndexSet& plus_set,
                   double act_tol) {
  IndexSet rows = set_union(plus_set, active_set(poly, x, act_tol));
  if (rows.empty()) return x;
  Matrix ar = select_rows(poly.A(), rows);
  Vector br = select_entries(poly.b(), rows);
  Vector anchor = equality_project(ar, br, x);
  double scale = 1.0 + br.lpNorm<Eigen::Infinity>();
  if ((ar * anchor - br).lpNorm<Eigen::Infinity>() > 1e-8 * scale)
    throw std::runtime_error("face_anchor: inconsistent anchor system");
  return anchor;
}

RunDiagnostics lemma_ratios(const std::vector<Vector>& trace_points, const KnownSolution& sol,
                            const Objective& obj, const Polyhedron& poly) {
  RunDiagnostics diag;
  for (const Vector& x : trace_points) {
    double dist = (x - sol.x_star).norm();
    diag.distance.push_back(dist);
    double gap;
    try {
      gap = (x - face_anchor(poly, x, sol.active_plus)).norm();
    } catch (const std::runtime_error&) {
      ++diag.skipped;
      continue;
    }
    diag.anchor_gap.push_back(gap);
    if (dist > 1e-12)
      diag.gap_ratio.push_back(gap / (dist * dist));
    else
      ++diag.skipped;
    double e_global = global_error(obj, poly, x);
    if (e_global > 1e-300)
      diag.bound_ratio.push_back(dist / e_global);
  }
  return diag;
}

}  // namespace pasa
