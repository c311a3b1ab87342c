#include "pasa/polyhedron.hpp"

#include <cmath>

namespace pasa {

Polyhedron::Polyhedron(Matrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.size())
    throw std::invalid_argument("Polyhedron: A and b row counts differ");
  if (!a_.allFinite() || !b_.allFinite())
    throw std::invalid_argument("Polyhedron: non-finite entry");
}

Polyhedron Polyhedron::all_of(int n) { return Polyhedron(Matrix(0, n), Vector(0)); }

Vector residual(const Polyhedron& poly, const Vector& x) {
  if (x.size() != poly.dim()) throw std::invalid_argument("residual: dimension mismatch");
  return poly.A() * x - poly.b();
}

IndexSet active_set(const Polyhedron& poly, const Vector& x, double act_tol) {
  Vector r = residual(poly, x);
  IndexSet act;
  for (int i = 0; i < poly.rows(); ++i)
    if (r[i] >= -act_tol * (1.0 + std::abs(poly.b()[i]))) act.push_back(i);
  return act;
}

IndexSet free_set(const Polyhedron& poly, const Vector& x, double act_tol) {
  Vector r = residual(poly, x);
  IndexSet fre;
  for (int i = 0; i < poly.rows(); ++i)
    if (r[i] < -act_tol * (1.0 + std::abs(poly.b()[i]))) fre.push_back(i);
  return fre;
}

bool is_feasible(const Polyhedron& poly, const Vector& x, double feas_tol) {
  if (x.size() != poly.dim()) throw std::invalid_argument("is_feasible: dimension mismatch");
  if (poly.rows() == 0) return true;
  return residual(poly, x).maxCoeff() <= feas_tol;
}

Face make_face(const Polyhedron& poly, IndexSet active) {
  for (int i : active)
    if (i < 0 || i >= poly.rows()) throw std::invalid_argument("make_face: row index out of range");
  return Face{poly, std::move(active)};
}

bool face_contains(const Face& face, const Vector& x, double act_tol, double feas_tol) {
  Vector r = residual(face.base, x);
  for (int i = 0; i < face.base.rows(); ++i) {
    double scale = 1.0 + std::abs(face.base.b()[i]);
    if (contains(face.equality_rows, i)) {
      if (std::abs(r[i]) > act_tol * scale) return false;
    } else if (r[i] > feas_tol) {
      return false;
    }
  }
  return true;
}

}  // namespace pasa
