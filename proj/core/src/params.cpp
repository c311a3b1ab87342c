#include "pasa/params.hpp"

namespace pasa {

void PasaParams::validate() const {
  auto open01 = [](double v, const char* name) {
    if (!(v > 0.0 && v < 1.0))
      throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
  };
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  open01(theta0, "theta0");
  open01(mu, "mu");
  open01(delta, "delta");
  open01(eta, "eta");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  open01(gamma, "gamma");
  if (!(beta > 1.0 && beta < 2.0)) throw std::invalid_argument("beta must lie in (1, 2)");
  if (!(act_tol > 0.0)) throw std::invalid_argument("act_tol must be > 0");
  if (!(feas_tol > 0.0)) throw std::invalid_argument("feas_tol must be > 0");
  if (max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");
  if (backtrack_cap < 1) throw std::invalid_argument("backtrack_cap must be >= 1");
}

}  // namespace pasa
