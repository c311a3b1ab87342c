#include "pasa/measures.hpp"

#include <cmath>

#include "pasa/linalg.hpp"

namespace pasa {

ProjectionResult step_point(const Objective& obj, const Polyhedron& poly, const Vector& x,
                            double alpha, const ProjectOptions& options) {
  if (alpha < 0.0) throw std::invalid_argument("step_point: alpha must be >= 0");
  ProjectOptions opt = options;
  if (!opt.anchor) opt.anchor = x;
  return project(poly, x - alpha * obj.gradient(x), opt);
}

Vector direction(const Objective& obj, const Polyhedron& poly, const Vector& x, double alpha,
                 const ProjectOptions& options) {
  return step_point(obj, poly, x, alpha, options).point - x;
}

double global_error(const Objective& obj, const Polyhedron& poly, const Vector& x,
                    const ProjectOptions& options) {
  return direction(obj, poly, x, 1.0, options).norm();
}

double local_error(const Objective& obj, const Polyhedron& poly, const Vector& x, double act_tol) {
  return null_gradient(poly, active_set(poly, x, act_tol), obj.gradient(x)).norm();
}

IndexSet undecided_from(const Vector& lambda, const Vector& slack, double E, double gamma,
                        double beta) {
  IndexSet u;
  if (E <= 0.0) return u;
  const double lam_threshold = std::pow(E, gamma);
  const double slack_threshold = std::pow(E, beta);
  for (int i = 0; i < lambda.size(); ++i)
    if (lambda[i] >= lam_threshold && slack[i] >= slack_threshold) u.push_back(i);
  return u;
}

IndexSet undecided_set(const Objective& obj, const Polyhedron& poly, const Vector& x, double gamma,
                       double beta, const ProjectOptions& options) {
  return make_snapshot(obj, poly, x, gamma, beta, options).undecided;
}

StationaritySnapshot make_snapshot(const Objective& obj, const Polyhedron& poly, const Vector& x,
                                   double gamma, double beta, const ProjectOptions& options) {
  StationaritySnapshot snap;
  snap.x = x;
  ProjectionResult unit = step_point(obj, poly, x, 1.0, options);
  snap.E = (unit.point - x).norm();
  snap.lambda = unit.multipliers;
  snap.active = active_set(poly, x, options.act_tol);
  snap.e = null_gradient(poly, snap.active, obj.gradient(x)).norm();
  snap.undecided = undecided_from(snap.lambda, -residual(poly, x), snap.E, gamma, beta);
  return snap;
}

}  // namespace pasa
