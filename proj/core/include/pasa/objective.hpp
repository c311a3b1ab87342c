#pragma once

#include <functional>
#include <optional>

#include "pasa/types.hpp"

namespace pasa {

/// Evaluation contract for a smooth objective. Callbacks must be pure:
/// the same x always yields the same value and gradient.
struct Objective {
  int dimension = 0;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  /// Optional Lipschitz constant of the gradient, for diagnostics only.
  std::optional<double> lipschitz_hint;
};

}  // namespace pasa
