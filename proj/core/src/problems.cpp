#include "pasa/problems.hpp"

#include <cmath>

#include "pasa/linalg.hpp"

namespace pasa {

Objective quadratic_objective(const Matrix& q, const Vector& c) {
  if (q.rows() != q.cols()) throw std::invalid_argument("quadratic_objective: Q must be square");
  if (c.size() != q.rows()) throw std::invalid_argument("quadratic_objective: c length mismatch");
  if ((q - q.transpose()).lpNorm<Eigen::Infinity>() > 1e-12)
    throw std::invalid_argument("quadratic_objective: Q is not symmetric");

  Objective obj;
  obj.dimension = static_cast<int>(q.rows());
  obj.value = [q, c](const Vector& x) { return 0.5 * x.dot(q * x) + c.dot(x); };
  obj.gradient = [q, c](const Vector& x) -> Vector { return q * x + c; };
  Eigen::SelfAdjointEigenSolver<Matrix> es(q, Eigen::EigenvaluesOnly);
  obj.lipschitz_hint = es.eigenvalues().cwiseAbs().maxCoeff();
  return obj;
}

Objective rosenbrock_objective(int n) {
  if (n < 2) throw std::invalid_argument("rosenbrock_objective: n must be >= 2");
  Objective obj;
  obj.dimension = n;
  obj.value = [n](const Vector& x) {
    double f = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      double t = x[i + 1] - x[i] * x[i];
      double u = 1.0 - x[i];
      f += 100.0 * t * t + u * u;
    }
    return f;
  };
  obj.gradient = [n](const Vector& x) -> Vector {
    Vector g = Vector::Zero(n);
    for (int i = 0; i + 1 < n; ++i) {
      double t = x[i + 1] - x[i] * x[i];
      g[i] += -400.0 * x[i] * t - 2.0 * (1.0 - x[i]);
      g[i + 1] += 200.0 * t;
    }
    return g;
  };
  return obj;
}

ProjectionResult brute_force_project(const Polyhedron& poly, const Vector& z) {
  const int m = poly.rows();
  const int n = poly.dim();
  if (m > 12 || n > 6)
    throw std::invalid_argument("brute_force_project: problem too large for enumeration");
  if (z.size() != n) throw std::invalid_argument("brute_force_project: dimension mismatch");

  const Matrix& a = poly.A();
  const Vector& b = poly.b();
  const double scale = 1.0 + z.norm();

  ProjectionResult best;
  double best_dist = std::numeric_limits<double>::infinity();
  bool found = false;

  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    IndexSet s;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s.push_back(i);

    Matrix as = select_rows(a, s);
    Vector bs = select_entries(b, s);
    Vector y = equality_project(as, bs, z);
    if (!s.empty() && (as * y - bs).lpNorm<Eigen::Infinity>() > 1e-9 * scale) continue;
    if (m > 0 && (a * y - b).maxCoeff() > 1e-9 * scale) continue;

    Vector lam_s = s.empty() ? Vector(0) : least_squares_min_norm(as.transpose(), z - y);
    if (lam_s.size() > 0 && lam_s.minCoeff() < -1e-9 * scale) continue;

    double dist = (z - y).norm();
    if (dist < best_dist - 1e-14 * scale) {
      best_dist = dist;
      found = true;
      best.point = y;
      best.multipliers = Vector::Zero(m);
      for (std::size_t j = 0; j < s.size(); ++j)
        best.multipliers[s[j]] = std::max(lam_s[static_cast<Eigen::Index>(j)], 0.0);
      best.active_at_point = active_set(poly, y);
      Vector stat = y - z + a.transpose() * best.multipliers;
      best.kkt_residual = (stat.size() > 0 ? stat.lpNorm<Eigen::Infinity>() : 0.0);
    }
  }
  if (!found) throw InfeasibleError("brute_force_project: no feasible KKT candidate");
  return best;
}

std::vector<TestProblem> degenerate_qp_suite() {
  std::vector<TestProblem> suite;

  Matrix box2(4, 2);
  box2 << 1, 0, 0, 1, -1, 0, 0, -1;
  Vector box2_b(4);
  box2_b << 1, 1, 0, 0;
  Polyhedron box(box2, box2_b);

  {
    // (a) nondegenerate: pull toward (2, 2), minimizer at the (1, 1) vertex
    Matrix q = Matrix::Identity(2, 2);
    Vector c(2);
    c << -2, -2;
    Vector xs(2);
    xs << 1, 1;
    Vector lam(4);
    lam << 1, 1, 0, 0;
    suite.push_back(
        TestProblem{"boxqp_nondegenerate", quadratic_objective(q, c), box,
                    KnownSolution{xs, lam, {0, 1}, false, 1.0}});
  }
  {
    // (b) degenerate: pull toward (1, 2); row 0 is active with zero multiplier
    Matrix q = Matrix::Identity(2, 2);
    Vector c(2);
    c << -1, -2;
    Vector xs(2);
    xs << 1, 1;
    Vector lam(4);
    lam << 0, 1, 0, 0;
    suite.push_back(TestProblem{"boxqp_degenerate", quadratic_objective(q, c), box,
                                KnownSolution{xs, lam, {1}, true, 1.0}});
  }
  {
    // (c) 3-D degenerate with independent active gradients: pull toward
    // (2, 1, 3) under x <= (1, 1, 1); row 1 has a zero multiplier
    Matrix a = Matrix::Identity(3, 3);
    Vector b = Vector::Ones(3);
    Matrix q = Matrix::Identity(3, 3);
    Vector c(3);
    c << -2, -1, -3;
    Vector xs = Vector::Ones(3);
    Vector lam(3);
    lam << 1, 0, 2;
    suite.push_back(TestProblem{"corner3_degenerate", quadratic_objective(q, c),
                                Polyhedron(a, b), KnownSolution{xs, lam, {0, 2}, true, 1.0}});
  }
  return suite;
}

double kkt_residual(const Objective& obj, const Polyhedron& poly, const Vector& x,
                    const Vector& lambda) {
  Vector stat = obj.gradient(x) + poly.A().transpose() * lambda;
  double out = stat.lpNorm<Eigen::Infinity>();
  if (poly.rows() > 0) {
    Vector r = residual(poly, x);
    out = std::max(out, r.maxCoeff());                       // feasibility
    out = std::max(out, -lambda.minCoeff());                 // sign
    out = std::max(out, lambda.cwiseProduct(r).cwiseAbs().maxCoeff());  // complementarity
  }
  return out;
}

double gradient_check(const Objective& obj, const Vector& x, double h) {
  Vector g = obj.gradient(x);
  double worst = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    Vector e = Vector::Zero(x.size());
    e[i] = h * (1.0 + std::abs(x[i]));
    double fd = (obj.value(x + e) - obj.value(x - e)) / (2.0 * e[i]);
    worst = std::max(worst, std::abs(fd - g[i]) / (1.0 + std::abs(g[i])));
  }
  return worst;
}

}  // namespace pasa
