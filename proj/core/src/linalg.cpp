#include "pasa/linalg.hpp"

namespace pasa {
namespace {

Eigen::CompleteOrthogonalDecomposition<Matrix> factor(const Matrix& m) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
  cod.setThreshold(kRankThreshold);
  cod.compute(m);
  return cod;
}

}  // namespace

Vector least_squares_min_norm(const Matrix& m, const Vector& r) {
  if (r.size() != m.rows())
    throw std::invalid_argument("least_squares_min_norm: rhs length does not match rows");
  if (m.rows() == 0 || m.cols() == 0) return Vector::Zero(m.cols());
  return factor(m).solve(r);
}

Vector equality_project(const Matrix& m, const Vector& r, const Vector& z) {
  if (z.size() != m.cols())
    throw std::invalid_argument("equality_project: point length does not match cols");
  if (m.rows() == 0) return z;
  // z minus the min-norm correction: z - M^+ (M z - r).
  return z - factor(m).solve(m * z - r);
}

Vector null_space_project(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols())
    throw std::invalid_argument("null_space_project: vector length does not match cols");
  if (m.rows() == 0) return v;
  // The min-norm solution of M t = M v is the row-space component of v.
  Vector row_component = factor(m).solve(m * v);
  return v - row_component;
}

}  // namespace pasa
