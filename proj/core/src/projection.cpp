#include "pasa/projection.hpp"

#include <cmath>
#include <limits>

#include "pasa/linalg.hpp"

namespace pasa {
namespace {

constexpr double kTieTol = 1e-12;

bool satisfies(const Polyhedron& poly, const IndexSet& eq, const Vector& p, double act_tol,
               double feas_tol) {
  Vector r = residual(poly, p);
  for (int i = 0; i < poly.rows(); ++i) {
    double scale = 1.0 + std::abs(poly.b()[i]);
    if (contains(eq, i)) {
      if (std::abs(r[i]) > act_tol * scale) return false;
    } else if (r[i] > feas_tol) {
      return false;
    }
  }
  return true;
}

// Largest t in [0, 1] with anchor + t (z - anchor) feasible. Fails (nullopt)
// when the ray leaves the equality rows.
std::optional<Vector> ray_start(const Polyhedron& poly, const IndexSet& eq, const Vector& anchor,
                                const Vector& z) {
  Vector d = z - anchor;
  double t = 1.0;
  for (int i = 0; i < poly.rows(); ++i) {
    double ad = poly.A().row(i).dot(d);
    if (contains(eq, i)) {
      if (std::abs(ad) > kTieTol * (1.0 + d.norm())) return std::nullopt;
      continue;
    }
    if (ad <= 0) continue;
    double ti = (poly.b()[i] - poly.A().row(i).dot(anchor)) / ad;
    if (ti < t) t = std::max(ti, 0.0);
  }
  return anchor + t * d;
}

// Alternating projections onto the equality affine hull and the violated
// halfspaces; the plain feasibility fallback when no anchor is usable.
Vector alternating_start(const Polyhedron& poly, const IndexSet& eq, const Vector& seed,
                         const ProjectOptions& opt) {
  const int m = poly.rows();
  Matrix a_eq = select_rows(poly.A(), eq);
  Vector b_eq = select_entries(poly.b(), eq);
  Vector p = seed;
  const int sweeps = 10 * (m + 1);
  for (int s = 0; s < sweeps; ++s) {
    if (!eq.empty()) p = equality_project(a_eq, b_eq, p);
    bool moved = false;
    for (int i = 0; i < m; ++i) {
      if (contains(eq, i)) continue;
      double nn = poly.A().row(i).squaredNorm();
      if (nn == 0.0) continue;
      double r = poly.A().row(i).dot(p) - poly.b()[i];
      if (r > opt.feas_tol) {
        p -= (r / nn) * poly.A().row(i).transpose();
        moved = true;
      }
    }
    if (!moved && satisfies(poly, eq, p, opt.act_tol, opt.feas_tol)) return p;
  }
  throw InfeasibleError("projection: could not locate a feasible point");
}

Vector feasible_start(const Polyhedron& poly, const IndexSet& eq, const Vector& z,
                      const ProjectOptions& opt) {
  if (satisfies(poly, eq, z, opt.act_tol, opt.feas_tol)) return z;
  if (opt.anchor && satisfies(poly, eq, *opt.anchor, opt.act_tol, opt.feas_tol)) {
    auto p = ray_start(poly, eq, *opt.anchor, z);
    if (p && satisfies(poly, eq, *p, opt.act_tol, opt.feas_tol)) return *p;
    return alternating_start(poly, eq, *opt.anchor, opt);
  }
  return alternating_start(poly, eq, z, opt);
}

// Primal active-set method for min ||z - y|| subject to A y <= b with the
// rows in eq pinned to equality.
ProjectionResult least_distance(const Polyhedron& poly, const IndexSet& eq, const Vector& z,
                                const ProjectOptions& opt) {
  if (z.size() != poly.dim()) throw std::invalid_argument("project: dimension mismatch");
  if (!z.allFinite()) throw std::invalid_argument("project: non-finite point");

  const Matrix& a = poly.A();
  const Vector& b = poly.b();
  const int m = poly.rows();
  const double scale = 1.0 + z.norm();
  const int cap = opt.max_changes_factor * (m + 1);

  Vector x = feasible_start(poly, eq, z, opt);
  IndexSet work = set_union(eq, active_set(poly, x, opt.act_tol));

  int changes = 0;
  while (true) {
    Vector target = equality_project(select_rows(a, work), select_entries(b, work), z);
    if ((target - x).norm() <= 1e-12 * scale) {
      // At the working-set minimizer: verify multiplier signs.
      Vector lam_w = least_squares_min_norm(select_rows(a, work).transpose(), z - x);
      double most_negative = 0.0;
      for (std::size_t j = 0; j < work.size(); ++j)
        if (!contains(eq, work[j]))
          most_negative = std::min(most_negative, lam_w[static_cast<Eigen::Index>(j)]);
      int drop = -1;
      if (most_negative < -kTieTol * scale) {
        // drop the most negative multiplier; ties go to the smallest row index
        for (std::size_t j = 0; j < work.size() && drop < 0; ++j)
          if (!contains(eq, work[j]) &&
              lam_w[static_cast<Eigen::Index>(j)] <= most_negative + kTieTol * scale)
            drop = static_cast<int>(j);
      }
      if (drop < 0) {
        x = target;
        break;
      }
      work.erase(work.begin() + drop);
      if (++changes > cap) throw NoConvergenceError("projection: working-set cap exceeded");
      continue;
    }
    Vector d = target - x;
    double step = 1.0;
    int blocking = -1;
    for (int i = 0; i < m; ++i) {
      if (contains(work, i)) continue;
      double ad = a.row(i).dot(d);
      if (ad <= kTieTol * (1.0 + d.norm())) continue;
      double ti = (b[i] - a.row(i).dot(x)) / ad;
      if (ti < step - kTieTol) {
        step = std::max(ti, 0.0);
        blocking = i;
      }
    }
    if (blocking < 0) {
      x = target;
    } else {
      x += step * d;
      insert_index(work, blocking);
      if (++changes > cap) throw NoConvergenceError("projection: working-set cap exceeded");
    }
  }

  ProjectionResult res;
  res.point = x;
  res.iterations = changes;
  res.active_at_point = set_union(eq, active_set(poly, x, opt.act_tol));

  // Min-norm multipliers over the full active set; fall back to the working
  // set if rank deficiency produces a genuinely negative inequality entry.
  res.multipliers = Vector::Zero(m);
  auto recover = [&](const IndexSet& rows) {
    Vector lam = least_squares_min_norm(select_rows(a, rows).transpose(), z - x);
    Vector full = Vector::Zero(m);
    for (std::size_t j = 0; j < rows.size(); ++j)
      full[rows[j]] = lam[static_cast<Eigen::Index>(j)];
    return full;
  };
  if (!res.active_at_point.empty()) {
    Vector full = recover(res.active_at_point);
    bool bad = false;
    for (int i : res.active_at_point)
      if (!contains(eq, i) && full[i] < -1e-9 * scale) bad = true;
    if (bad) full = recover(work);
    for (int i = 0; i < m; ++i)
      if (!contains(eq, i) && full[i] < 0.0 && full[i] >= -kTieTol * scale) full[i] = 0.0;
    res.multipliers = full;
  }

  Vector stat = x - z + a.transpose() * res.multipliers;
  Vector r = residual(poly, x);
  double sign_violation = 0.0;
  double comp_violation = 0.0;
  for (int i = 0; i < m; ++i) {
    if (!contains(eq, i)) sign_violation = std::max(sign_violation, -res.multipliers[i]);
    comp_violation = std::max(comp_violation, std::abs(res.multipliers[i] * r[i]));
  }
  double stat_norm = stat.size() > 0 ? stat.lpNorm<Eigen::Infinity>() : 0.0;
  res.kkt_residual = stat_norm + std::max(sign_violation, 0.0) + comp_violation;
  return res;
}

}  // namespace

ProjectionResult project(const Polyhedron& poly, const Vector& z, const ProjectOptions& options) {
  return least_distance(poly, {}, z, options);
}

ProjectionResult project_face(const Face& face, const Vector& z, const ProjectOptions& options) {
  return least_distance(face.base, face.equality_rows, z, options);
}

Vector null_gradient(const Polyhedron& poly, const IndexSet& active, const Vector& g) {
  if (g.size() != poly.dim()) throw std::invalid_argument("null_gradient: dimension mismatch");
  if (active.empty()) return g;
  return null_space_project(select_rows(poly.A(), active), g);
}

}  // namespace pasa
