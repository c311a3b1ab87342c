#pragma once

#include <random>

#include "pasa/phase_one.hpp"
#include "pasa/problems.hpp"

namespace pasa::testing {

inline Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

inline Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

/// The unit box [0,1]^2 as four rows: x1<=1, x2<=1, -x1<=0, -x2<=0.
inline Polyhedron box2() {
  Matrix a(4, 2);
  a << 1, 0, 0, 1, -1, 0, 0, -1;
  Vector b(4);
  b << 1, 1, 0, 0;
  return Polyhedron(a, b);
}

/// f(x) = 0.5*||x - (2,2)||^2 over box2; minimizer (1,1). Kept in the
/// distance form (with its constant) so hand-computed f values match.
inline Objective boxqp_objective() {
  Objective obj;
  obj.dimension = 2;
  obj.value = [](const Vector& x) { return 0.5 * (x - vec2(2, 2)).squaredNorm(); };
  obj.gradient = [](const Vector& x) { return Vector(x - vec2(2, 2)); };
  obj.lipschitz_hint = 1.0;
  return obj;
}

inline Polyhedron halfplane() {
  Matrix a(1, 2);
  a << 1, 1;
  Vector b(1);
  b << 1;
  return Polyhedron(a, b);
}

/// A random polyhedron with a certified strictly feasible point: entries of
/// A drawn from [-2,2], b = A*p + slack with slack in [0.1, 1].
struct RandomPoly {
  Polyhedron poly;
  Vector interior;
};

inline RandomPoly random_polyhedron(std::mt19937& rng, int n, int m) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::uniform_real_distribution<double> point(-1.0, 1.0);
  std::uniform_real_distribution<double> slack(0.1, 1.0);
  Matrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
  Vector p(n);
  for (int j = 0; j < n; ++j) p[j] = point(rng);
  Vector b = a * p;
  for (int i = 0; i < m; ++i) b[i] += slack(rng);
  return {Polyhedron(std::move(a), std::move(b)), std::move(p)};
}

inline Vector random_vector(std::mt19937& rng, int n, double lo = -3.0, double hi = 3.0) {
  std::uniform_real_distribution<double> unif(lo, hi);
  Vector v(n);
  for (int j = 0; j < n; ++j) v[j] = unif(rng);
  return v;
}

/// Random symmetric positive definite Q = B^T B + tau I with entries of B
/// in [-1,1].
inline Matrix random_spd(std::mt19937& rng, int n, double tau = 0.1) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = unif(rng);
  return Matrix(b.transpose() * b + tau * Matrix::Identity(n, n));
}

/// Spectral norm of a symmetric matrix by power iteration.
inline double sym_norm(const Matrix& q, int iters = 300) {
  std::mt19937 rng(12345);
  Vector v = random_vector(rng, static_cast<int>(q.cols()), -1.0, 1.0);
  v.normalize();
  double lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    Vector w = q * v;
    lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    v = w / lambda;
  }
  return lambda;
}

/// Independent Armijo oracle: scan j = 0, 1, ... and return the smallest j
/// with f(x + eta^j d) <= f(x) + eta^j * delta * gd, or -1 past the cap.
inline int armijo_smallest_j(const Objective& obj, const Vector& x, const Vector& d, double gd,
                             double delta, double eta, int cap = 60) {
  const double f0 = obj.value(x);
  double s = 1.0;
  for (int j = 0; j <= cap; ++j, s *= eta) {
    if (armijo_accepts(f0, obj.value(x + s * d), s, delta, gd)) return j;
  }
  return -1;
}

}  // namespace pasa::testing
