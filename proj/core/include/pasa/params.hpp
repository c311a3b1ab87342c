#pragma once

#include "pasa/polyhedron.hpp"

namespace pasa {

/// All solver tunables. The interval constraints below are checked by
/// validate(), which solve() and the CLI call before running.
struct PasaParams {
  double eps = 1e-8;      // termination: stop once E(x) <= eps
  double theta0 = 0.1;    // initial branching threshold, in (0, 1)
  double mu = 0.5;        // decay factor for theta, in (0, 1)
  double delta = 1e-4;    // Armijo slope fraction, in (0, 1)
  double eta = 0.5;       // backtracking factor, in (0, 1)
  double alpha = 1.0;     // gradient step scale, > 0
  double gamma = 0.5;     // undecided-set multiplier exponent, in (0, 1)
  double beta = 1.5;      // undecided-set slack exponent, in (1, 2)
  double act_tol = kDefaultActTol;
  double feas_tol = kDefaultFeasTol;
  int max_iter = 10000;
  int backtrack_cap = 60;
  /// Use a Barzilai-Borwein trial step inside the phase-two optimizer
  /// (monotonicity is still enforced by the Armijo backtracking). Off means
  /// the fixed-alpha projected gradient step.
  bool bb_steps = true;

  void validate() const;
};

}  // namespace pasa
