#include "pasa/phase_one.hpp"

#include <cmath>

namespace pasa {

GpaStep gpa_step(const Objective& obj, const Polyhedron& poly, const Vector& x,
                 const PasaParams& params) {
  ProjectOptions opt;
  opt.act_tol = params.act_tol;
  opt.feas_tol = params.feas_tol;
  Vector d = direction(obj, poly, x, params.alpha, opt);

  GpaStep out;
  out.direction = d;
  if (d.norm() <= 1e-14 * (1.0 + x.norm())) {
    out.x_next = x;
    out.f_next = obj.value(x);
    out.stationary = true;
    out.value_evals = 1;
    return out;
  }

  const double f0 = obj.value(x);
  const double gd = obj.gradient(x).dot(d);
  double s = 1.0;
  for (int j = 0; j <= params.backtrack_cap; ++j, s *= params.eta) {
    Vector xn = x + s * d;
    double fn = obj.value(xn);
    ++out.value_evals;
    if (armijo_accepts(f0, fn, s, params.delta, gd)) {
      out.x_next = std::move(xn);
      out.step = s;
      out.backtracks = j;
      out.f_next = fn;
      return out;
    }
  }

  // Rounding floor: the exact test failed for every step, so the true
  // decrease is below the resolution of f. Take the candidate that most
  // reduces the stationarity error while keeping f flat to rounding.
  const double slack = armijo_slack(f0);
  const double err0 = (project(poly, x - obj.gradient(x), opt).point - x).norm();
  double best_err = err0;
  s = 1.0;
  for (int j = 0; j <= params.backtrack_cap; ++j, s *= params.eta) {
    Vector xn = x + s * d;
    double fn = obj.value(xn);
    ++out.value_evals;
    if (fn > f0 + slack) continue;
    double err = (project(poly, xn - obj.gradient(xn), opt).point - xn).norm();
    if (err < best_err) {
      best_err = err;
      out.x_next = std::move(xn);
      out.step = s;
      out.backtracks = j;
      out.f_next = fn;
    }
  }
  if (best_err < err0) return out;
  throw LineSearchError("gpa_step: backtrack cap exceeded");
}

}  // namespace pasa
