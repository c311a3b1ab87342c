#pragma once

#include "pasa/phase_one.hpp"

namespace pasa {

/// State of one phase-two episode. The face's equality rows only ever grow
/// while the episode lasts; a fresh episode starts at every branch from
/// phase one.
struct LcoState {
  Face face;
  Vector x;
  bool started = false;
  int consecutive_same_active = 0;
  // gradient history for the Barzilai-Borwein trial step; cleared whenever
  // the face changes
  std::optional<Vector> prev_x;
  std::optional<Vector> prev_gradient;
};

/// F4 startup: the smallest j >= 0 with x_next = P_face(x - alpha eta^j g^A)
/// satisfying the Armijo bound f(x_next) <= f(x) + delta g.(x_next - x).
/// Constraints active at x stay active at x_next by construction.
GpaStep lco_startup_step(const Objective& obj, const Polyhedron& poly, const Vector& x,
                         const PasaParams& params);

/// Run the startup step and assemble the episode state (face grown by any
/// rows that became active). `info`, when given, receives the step record.
LcoState lco_begin(const Objective& obj, const Polyhedron& poly, const Vector& x,
                   const PasaParams& params, GpaStep* info = nullptr);

/// One monotone projected-gradient step on the current face. The trial step
/// length is Barzilai-Borwein when history exists and params.bb_steps is
/// set, otherwise the fixed alpha; Armijo backtracking along the chord
/// enforces descent either way. Rows active at the new iterate are appended
/// to the face.
LcoState lco_step(const Objective& obj, const Polyhedron& poly, const LcoState& state,
                  const PasaParams& params, GpaStep* info = nullptr);

}  // namespace pasa
