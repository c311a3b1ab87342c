#include "pasa/driver.hpp"

#include <limits>

namespace pasa {

const char* to_string(Status status) {
  switch (status) {
    case Status::converged: return "converged";
    case Status::max_iter: return "max_iter";
    case Status::infeasible: return "infeasible";
    case Status::line_search_failure: return "line_search_failure";
  }
  return "unknown";
}

SolveResult solve(const Objective& obj, const Polyhedron& poly, const Vector& x0,
                  const PasaParams& params) {
  params.validate();
  if (x0.size() != poly.dim()) throw std::invalid_argument("solve: x0 dimension mismatch");

  SolveResult res;
  ProjectOptions opt;
  opt.act_tol = params.act_tol;
  opt.feas_tol = params.feas_tol;

  Vector x;
  try {
    x = project(poly, x0, opt).point;
  } catch (const InfeasibleError&) {
    res.status = Status::infeasible;
    res.x = x0;
    res.f = std::numeric_limits<double>::quiet_NaN();
    res.E = std::numeric_limits<double>::quiet_NaN();
    return res;
  }

  double theta = params.theta0;
  Phase phase = Phase::one;
  Branch pending = Branch::none;
  std::optional<LcoState> lco;
  // set when the face optimizer stops making numerical progress: the face
  // is optimized to machine precision, so in exact arithmetic e would have
  // dropped below theta E by now
  bool face_exhausted = false;
  // after a forced branch back, take one full gradient projection step
  // before re-testing the branch condition, so the iterate can leave the
  // exhausted face
  bool force_gpa = false;
  int k = 0;

  auto record = [&](Phase ph, const StationaritySnapshot& snap, double f, double step, Branch br) {
    res.trace.push_back(IterateRecord{k, ph, f, snap.E, snap.e, theta, step,
                                      static_cast<int>(snap.active.size()),
                                      static_cast<int>(snap.undecided.size()), br});
    res.points.push_back(snap.x);
  };

  try {
    while (true) {
      if (k >= params.max_iter) {
        res.status = Status::max_iter;
        break;
      }
      StationaritySnapshot snap = make_snapshot(obj, poly, x, params.gamma, params.beta, opt);
      const double fx = obj.value(x);

      if (phase == Phase::one) {
        if (snap.E <= params.eps) {
          record(Phase::one, snap, fx, 0.0, pending);
          res.status = Status::converged;
          break;
        }
        if (snap.undecided.empty() && snap.e < theta * snap.E) theta *= params.mu;
        if (!force_gpa && snap.e >= theta * snap.E) {
          // branch: the F4 startup counts as the first phase-two iteration
          GpaStep info;
          lco = lco_begin(obj, poly, x, params, &info);
          record(Phase::two, snap, fx, info.step, Branch::one_to_two);
          pending = Branch::none;
          x = lco->x;
          phase = Phase::two;
          ++k;
          continue;
        }
        GpaStep gs = gpa_step(obj, poly, x, params);
        record(Phase::one, snap, fx, gs.step, pending);
        pending = Branch::none;
        force_gpa = false;
        if (gs.stationary) {
          // d = 0 while E > eps can only arise from tolerance mismatch;
          // the projection certifies the KKT point, so report convergence
          res.status = Status::converged;
          break;
        }
        x = gs.x_next;
        ++k;
      } else {
        if (snap.E <= params.eps) {
          record(Phase::two, snap, fx, 0.0, Branch::none);
          res.status = Status::converged;
          break;
        }
        if (face_exhausted || snap.e < theta * snap.E) {
          // re-handle this same iterate in phase one; a forced switch off
          // an exhausted face is not the branch rule firing, so it gets no
          // branch marker
          phase = Phase::one;
          pending = (snap.e < theta * snap.E) ? Branch::two_to_one : Branch::none;
          force_gpa = face_exhausted;
          face_exhausted = false;
          lco.reset();
          continue;
        }
        GpaStep info;
        *lco = lco_step(obj, poly, *lco, params, &info);
        record(Phase::two, snap, fx, info.step, Branch::none);
        face_exhausted =
            info.stationary || (lco->x - x).norm() <= 1e-13 * (1.0 + x.norm());
        x = lco->x;
        ++k;
      }
    }
  } catch (const LineSearchError&) {
    res.status = Status::line_search_failure;
  } catch (const InfeasibleError&) {
    res.status = Status::infeasible;
  }

  res.x = x;
  res.f = obj.value(x);
  res.E = global_error(obj, poly, x, opt);
  return res;
}

}  // namespace pasa
