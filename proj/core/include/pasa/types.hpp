#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace pasa {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Ordered, duplicate-free, 0-based constraint row indices.
using IndexSet = std::vector<int>;

/// The feasible set is empty (or a required subsystem is inconsistent).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative kernel hit its iteration cap without meeting its tolerance.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Armijo backtracking exhausted its backtrack budget.
struct LineSearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool contains(const IndexSet& set, int index);

/// Sorted union of two index sets.
IndexSet set_union(const IndexSet& a, const IndexSet& b);

/// Insert an index, keeping the set sorted; no-op if already present.
void insert_index(IndexSet& set, int index);

Matrix select_rows(const Matrix& m, const IndexSet& rows);
Vector select_entries(const Vector& v, const IndexSet& rows);

}  // namespace pasa
