#include "pasa/phase_two.hpp"

#include <cmath>

namespace pasa {
namespace {

ProjectOptions face_options(const PasaParams& params, const Vector& anchor) {
  ProjectOptions opt;
  opt.act_tol = params.act_tol;
  opt.feas_tol = params.feas_tol;
  opt.anchor = anchor;
  return opt;
}

}  // namespace

GpaStep lco_startup_step(const Objective& obj, const Polyhedron& poly, const Vector& x,
                         const PasaParams& params) {
  IndexSet act = active_set(poly, x, params.act_tol);
  Face face = make_face(poly, act);
  Vector g = obj.gradient(x);
  Vector ga = null_gradient(poly, act, g);
  const double f0 = obj.value(x);

  GpaStep out;
  out.value_evals = 1;
  if (ga.norm() <= 1e-14 * (1.0 + g.norm())) {
    // stationary on its face: the zero step satisfies Armijo with equality
    out.x_next = x;
    out.step = params.alpha;
    out.direction = Vector::Zero(x.size());
    out.f_next = f0;
    out.stationary = true;
    return out;
  }

  const ProjectOptions opt = face_options(params, x);
  double s = params.alpha;
  for (int j = 0; j <= params.backtrack_cap; ++j, s *= params.eta) {
    Vector xn = project_face(face, x - s * ga, opt).point;
    double fn = obj.value(xn);
    ++out.value_evals;
    if (armijo_accepts(f0, fn, 1.0, params.delta, g.dot(xn - x))) {
      out.x_next = std::move(xn);
      out.step = s;
      out.direction = out.x_next - x;
      out.backtracks = j;
      out.f_next = fn;
      return out;
    }
  }

  // rounding floor: see lco_step; pick the best representable error drop
  const double slack = armijo_slack(f0);
  const double err0 = ga.norm();
  double best_err = err0;
  s = params.alpha;
  for (int j = 0; j <= params.backtrack_cap; ++j, s *= params.eta) {
    Vector xn = project_face(face, x - s * ga, opt).point;
    double fn = obj.value(xn);
    ++out.value_evals;
    if (fn > f0 + slack) continue;
    double err =
        null_gradient(poly, active_set(poly, xn, params.act_tol), obj.gradient(xn)).norm();
    if (err < best_err) {
      best_err = err;
      out.x_next = std::move(xn);
      out.step = s;
      out.backtracks = j;
      out.f_next = fn;
    }
  }
  if (best_err < err0) {
    out.direction = out.x_next - x;
    return out;
  }
  throw LineSearchError("lco_startup_step: backtrack cap exceeded");
}

LcoState lco_begin(const Objective& obj, const Polyhedron& poly, const Vector& x,
                   const PasaParams& params, GpaStep* info) {
  GpaStep step = lco_startup_step(obj, poly, x, params);
  LcoState state{make_face(poly, active_set(poly, x, params.act_tol)), step.x_next, true};
  state.face.equality_rows =
      set_union(state.face.equality_rows, active_set(poly, state.x, params.act_tol));
  if (info) *info = std::move(step);
  return state;
}

LcoState lco_step(const Objective& obj, const Polyhedron& poly, const LcoState& state,
                  const PasaParams& params, GpaStep* info) {
  if (!state.started) throw std::logic_error("lco_step: startup step has not been taken");
  const Vector& x = state.x;
  IndexSet act = active_set(poly, x, params.act_tol);
  Vector g = obj.gradient(x);
  Vector ga = null_gradient(poly, act, g);

  // Trial step length: Barzilai-Borwein from the episode history when
  // available, the fixed alpha otherwise.
  double trial = params.alpha;
  if (params.bb_steps && state.prev_x && state.prev_gradient) {
    Vector dx = x - *state.prev_x;
    Vector dg = g - *state.prev_gradient;
    double denom = dx.dot(dg);
    if (denom > 1e-30) trial = std::clamp(dx.squaredNorm() / denom, 1e-10, 1e10);
  }

  const ProjectOptions opt = face_options(params, x);
  Vector d = project_face(state.face, x - trial * ga, opt).point - x;
  double gd = g.dot(d);
  if (gd > 0.0 && trial != params.alpha) {
    // BB trial produced an ascent chord; retreat to the fixed step
    d = project_face(state.face, x - params.alpha * ga, opt).point - x;
    gd = g.dot(d);
  }

  LcoState next = state;
  next.prev_x = x;
  next.prev_gradient = g;
  if (d.norm() <= 1e-14 * (1.0 + x.norm())) {
    next.consecutive_same_active += 1;
    if (info) {
      *info = GpaStep{};
      info->x_next = x;
      info->direction = d;
      info->f_next = obj.value(x);
      info->stationary = true;
    }
    return next;
  }

  const double f0 = obj.value(x);
  double s = 1.0;
  GpaStep rec;
  rec.direction = d;
  rec.value_evals = 0;
  bool accepted = false;
  for (int j = 0; j <= params.backtrack_cap && !accepted; ++j, s *= params.eta) {
    Vector xn = x + s * d;
    double fn = obj.value(xn);
    ++rec.value_evals;
    if (armijo_accepts(f0, fn, s, params.delta, gd)) {
      rec.x_next = std::move(xn);
      rec.step = s;
      rec.backtracks = j;
      rec.f_next = fn;
      accepted = true;
    }
  }
  if (!accepted) {
    // rounding floor: no representable decrease certifies the exact test;
    // take the candidate that most reduces the face-local error while
    // keeping f flat to rounding
    const double slack = armijo_slack(f0);
    const double err0 = ga.norm();
    double best_err = err0;
    s = 1.0;
    for (int j = 0; j <= params.backtrack_cap; ++j, s *= params.eta) {
      Vector xn = x + s * d;
      double fn = obj.value(xn);
      ++rec.value_evals;
      if (fn > f0 + slack) continue;
      double err =
          null_gradient(poly, active_set(poly, xn, params.act_tol), obj.gradient(xn)).norm();
      if (err < best_err) {
        best_err = err;
        rec.x_next = std::move(xn);
        rec.step = s;
        rec.backtracks = j;
        rec.f_next = fn;
        accepted = true;
      }
    }
    if (best_err >= err0) throw LineSearchError("lco_step: backtrack cap exceeded");
  }

  next.x = rec.x_next;
  IndexSet act_next = active_set(poly, next.x, params.act_tol);
  IndexSet grown = set_union(next.face.equality_rows, act_next);
  if (grown != next.face.equality_rows) {
    next.face.equality_rows = std::move(grown);
    next.prev_x.reset();
    next.prev_gradient.reset();
  }
  next.consecutive_same_active = (act_next == act) ? state.consecutive_same_active + 1 : 0;
  if (info) *info = std::move(rec);
  return next;
}

}  // namespace pasa
