#pragma once

#include "pasa/types.hpp"

namespace pasa {

/// Default activation tolerance. A row i counts as active at x when
/// (Ax - b)_i >= -act_tol * (1 + |b_i|); the relative scaling keeps the
/// classification stable for badly scaled rows.
inline constexpr double kDefaultActTol = 1e-10;

/// Default feasibility tolerance, slightly looser than the activation
/// tolerance so points returned by the projector always classify feasible.
inline constexpr double kDefaultFeasTol = 1e-9;

/// The polyhedron {x : A x <= b}. Zero rows means all of R^n.
class Polyhedron {
 public:
  Polyhedron(Matrix a, Vector b);

  /// The unconstrained polyhedron (m = 0) in dimension n.
  static Polyhedron all_of(int n);

  const Matrix& A() const { return a_; }
  const Vector& b() const { return b_; }
  int dim() const { return static_cast<int>(a_.cols()); }
  int rows() const { return static_cast<int>(a_.rows()); }

 private:
  Matrix a_;
  Vector b_;
};

/// A face of the base polyhedron: the rows in equality_rows are pinned to
/// equality, every other row stays an inequality.
struct Face {
  Polyhedron base;
  IndexSet equality_rows;
};

/// A x - b, length m (empty when m = 0).
Vector residual(const Polyhedron& poly, const Vector& x);

/// {i : (Ax - b)_i >= -act_tol * (1 + |b_i|)}; complement of the free set.
IndexSet active_set(const Polyhedron& poly, const Vector& x, double act_tol = kDefaultActTol);

IndexSet free_set(const Polyhedron& poly, const Vector& x, double act_tol = kDefaultActTol);

/// max_i (Ax - b)_i <= feas_tol (trivially true when m = 0).
bool is_feasible(const Polyhedron& poly, const Vector& x, double feas_tol = kDefaultFeasTol);

Face make_face(const Polyhedron& poly, IndexSet active);

/// Membership test for a face: pinned rows at equality to act_tol scale,
/// every other row feasible to feas_tol.
bool face_contains(const Face& face, const Vector& x, double act_tol = kDefaultActTol,
                   double feas_tol = kDefaultFeasTol);

}  // namespace pasa
