#include "pasa/types.hpp"

#include <algorithm>

namespace pasa {

bool contains(const IndexSet& set, int index) {
  return std::binary_search(set.begin(), set.end(), index);
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void insert_index(IndexSet& set, int index) {
  auto it = std::lower_bound(set.begin(), set.end(), index);
  if (it == set.end() || *it != index) set.insert(it, index);
}

Matrix select_rows(const Matrix& m, const IndexSet& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (Eigen::Index k = 0; k < out.rows(); ++k) out.row(k) = m.row(rows[k]);
  return out;
}

Vector select_entries(const Vector& v, const IndexSet& rows) {
  Vector out(static_cast<Eigen::Index>(rows.size()));
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] = v[rows[k]];
  return out;
}

}  // namespace pasa
