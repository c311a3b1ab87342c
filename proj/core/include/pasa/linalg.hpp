#pragma once

#include "pasa/types.hpp"

namespace pasa {

/// Relative pivot threshold for rank decisions in the orthogonal
/// factorizations below: pivot columns whose magnitude falls below this
/// fraction of the largest pivot are treated as zero.
inline constexpr double kRankThreshold = 1e-12;

/// Minimum-Euclidean-norm z minimizing ||M z - r||.
Vector least_squares_min_norm(const Matrix& m, const Vector& r);

/// Closest point to z on the affine set {y : M y = r}. Falls back to the
/// least-squares-closest point when the system is inconsistent; callers
/// that need consistency must check the residual themselves.
Vector equality_project(const Matrix& m, const Vector& r, const Vector& z);

/// Orthogonal projection of v onto the null space of M. M may have zero
/// rows, in which case the projection is the identity.
Vector null_space_project(const Matrix& m, const Vector& v);

}  // namespace pasa
