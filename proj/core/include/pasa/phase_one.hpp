#pragma once

#include <cmath>

#include "pasa/measures.hpp"
#include "pasa/params.hpp"

namespace pasa {

/// Exact Armijo acceptance test.
inline bool armijo_accepts(double f0, double fn, double s, double delta, double gd) {
  return fn <= f0 + s * delta * gd;
}

/// Tolerated f increase at the rounding floor: near a minimizer the true
/// decrease falls below one ulp of f(x), where the exact Armijo inequality
/// becomes undecidable in double precision. Steps within this slack keep
/// the recorded objective monotone to working accuracy.
inline double armijo_slack(double f0) { return 1e-15 * (1.0 + std::abs(f0)); }

/// One Armijo-certified step: x_next = x + s d with s = eta^j for the
/// smallest j >= 0 satisfying f(x + s d) <= f(x) + s delta g.d.
struct GpaStep {
  Vector x_next;
  double step = 0.0;      // accepted s
  Vector direction;       // d
  int backtracks = 0;     // accepted j
  double f_next = 0.0;
  int value_evals = 0;    // objective evaluations spent backtracking
  bool stationary = false;  // d = 0; the caller decides termination
};

/// One gradient projection iteration: d = y(x, alpha) - x followed by the
/// Armijo backtracking along the chord. Throws LineSearchError when the
/// backtrack cap is exceeded.
GpaStep gpa_step(const Objective& obj, const Polyhedron& poly, const Vector& x,
                 const PasaParams& params);

}  // namespace pasa
