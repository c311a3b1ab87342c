#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pasa/diagnostics.hpp"
#include "pasa/driver.hpp"
#include "problem_file.hpp"

namespace pasa::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMaxIter = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInputError = 3;
constexpr int kExitLineSearch = 4;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const Vector& v, const char* sep = " ") {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += fmt(v[i]);
  }
  return out;
}

std::string join(const IndexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s[i]);
  }
  return out;
}

Vector parse_point(const std::string& text, int n) {
  std::istringstream ss(text);
  std::vector<double> vals;
  std::string tok;
  while (ss >> tok) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("--point: bad number '" + tok + "'");
    vals.push_back(v);
  }
  if (static_cast<int>(vals.size()) != n)
    throw ParseError("--point: expected " + std::to_string(n) + " numbers, got " +
                     std::to_string(vals.size()));
  return Eigen::Map<Vector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

const char* branch_code(Branch b) {
  switch (b) {
    case Branch::none: return "-";
    case Branch::one_to_two: return "12";
    case Branch::two_to_one: return "21";
  }
  return "-";
}

void write_trace_csv(const std::string& path, const SolveResult& result) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open trace file '" + path + "'");
  out << "iter,phase,f,E,e,theta,step,n_active,n_undecided,branch\n";
  for (const IterateRecord& r : result.trace) {
    out << r.iter << ',' << (r.phase == Phase::one ? 1 : 2) << ',' << fmt_exact(r.f) << ','
        << fmt_exact(r.E) << ',' << fmt_exact(r.e) << ',' << fmt_exact(r.theta) << ','
        << fmt_exact(r.step) << ',' << r.n_active << ',' << r.n_undecided << ','
        << branch_code(r.branch) << '\n';
  }
}

void write_diagnostics_csv(const std::string& path, const SolveResult& result,
                           const Objective& obj, const Polyhedron& poly, const Vector& x_star) {
  // Derive the strictly-positive active set at x_star from the unit-step
  // projection multipliers.
  auto pr = project(poly, x_star - obj.gradient(x_star));
  IndexSet plus;
  for (int i = 0; i < poly.rows(); ++i)
    if (pr.multipliers[i] > 1e-8) plus.push_back(i);

  std::ofstream out(path);
  if (!out) throw ParseError("cannot open diagnostics file '" + path + "'");
  out << "iter,distance,anchor_gap,gap_ratio,bound_ratio\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < result.points.size(); ++k) {
    const Vector& x = result.points[k];
    double dist = (x - x_star).norm();
    double gap = nan;
    try {
      gap = (x - face_anchor(poly, x, plus)).norm();
    } catch (const std::runtime_error&) {
    }
    double ratio = (dist > 1e-12 && std::isfinite(gap)) ? gap / (dist * dist) : nan;
    double eg = global_error(obj, poly, x);
    double bound = eg > 1e-300 ? dist / eg : nan;
    out << result.trace[k].iter << ',' << fmt_exact(dist) << ',' << fmt_exact(gap) << ','
        << fmt_exact(ratio) << ',' << fmt_exact(bound) << '\n';
  }
}

nlohmann::json to_json(const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

int status_exit_code(Status s) {
  switch (s) {
    case Status::converged: return kExitOk;
    case Status::max_iter: return kExitMaxIter;
    case Status::infeasible: return kExitInfeasible;
    case Status::line_search_failure: return kExitLineSearch;
  }
  return kExitInputError;
}

struct CommonArgs {
  std::string problem_path;
  std::string point_text;
  bool json = false;
};

int cmd_solve(const CommonArgs& common, const PasaParams& params, const std::string& trace_path,
              const std::string& diag_path, const std::string& xstar_text) {
  ProblemFile pf = load_problem(common.problem_path);
  Objective obj = make_objective(pf);
  Polyhedron poly = make_polyhedron(pf);

  SolveResult result = solve(obj, poly, pf.x0, params);

  if (!trace_path.empty()) write_trace_csv(trace_path, result);
  if (!diag_path.empty()) {
    if (xstar_text.empty())
      throw ParseError("--diagnostics requires --xstar \"<known solution>\"");
    write_diagnostics_csv(diag_path, result, obj, poly, parse_point(xstar_text, pf.n));
  }

  if (common.json) {
    nlohmann::json doc;
    doc["x"] = to_json(result.x);
    doc["f"] = result.f;
    doc["E"] = result.E;
    doc["status"] = to_string(result.status);
    doc["trace"] = nlohmann::json::array();
    for (const IterateRecord& r : result.trace) {
      doc["trace"].push_back({{"iter", r.iter},
                              {"phase", r.phase == Phase::one ? 1 : 2},
                              {"f", r.f},
                              {"E", r.E},
                              {"e", r.e},
                              {"theta", r.theta},
                              {"step", r.step},
                              {"n_active", r.n_active},
                              {"n_undecided", r.n_undecided},
                              {"branch", branch_code(r.branch)}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "status: " << to_string(result.status) << "\n";
    std::cout << "x: " << join(result.x) << "\n";
    std::cout << "f: " << fmt(result.f) << "\n";
    std::cout << "E: " << fmt(result.E) << "\n";
    std::cout << "iterations: " << result.trace.size() << "\n";
  }
  return status_exit_code(result.status);
}

int cmd_project(const CommonArgs& common) {
  ProblemFile pf = load_problem(common.problem_path);
  Polyhedron poly = make_polyhedron(pf);
  Vector z = common.point_text.empty() ? pf.x0 : parse_point(common.point_text, pf.n);

  ProjectionResult pr = project(poly, z);
  if (common.json) {
    nlohmann::json doc;
    doc["point"] = to_json(pr.point);
    doc["multipliers"] = to_json(pr.multipliers);
    doc["active"] = pr.active_at_point;
    doc["kkt_residual"] = pr.kkt_residual;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "point: " << join(pr.point) << "\n";
    std::cout << "multipliers: " << join(pr.multipliers) << "\n";
    std::cout << "active: " << join(pr.active_at_point) << "\n";
    std::cout << "kkt_residual: " << fmt(pr.kkt_residual) << "\n";
  }
  return kExitOk;
}

int cmd_check(const CommonArgs& common, const PasaParams& params) {
  ProblemFile pf = load_problem(common.problem_path);
  Objective obj = make_objective(pf);
  Polyhedron poly = make_polyhedron(pf);
  Vector x = common.point_text.empty() ? pf.x0 : parse_point(common.point_text, pf.n);
  if (!is_feasible(poly, x, params.feas_tol)) throw InfeasibleError("check: point is infeasible");

  StationaritySnapshot snap = make_snapshot(obj, poly, x, params.gamma, params.beta);
  if (common.json) {
    nlohmann::json doc;
    doc["E"] = snap.E;
    doc["e"] = snap.e;
    doc["active"] = snap.active;
    doc["undecided"] = snap.undecided;
    doc["lambda"] = to_json(snap.lambda);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "E: " << fmt(snap.E) << "\n";
    std::cout << "e: " << fmt(snap.e) << "\n";
    std::cout << "active: " << join(snap.active) << "\n";
    std::cout << "undecided: " << join(snap.undecided) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Two-phase active set solver for smooth minimization over {x : Ax <= b}"};
  app.require_subcommand(1);

  CommonArgs common;
  PasaParams params;
  std::string trace_path;
  std::string diag_path;
  std::string xstar_text;

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--problem", common.problem_path, "problem file")->required();
    sub->add_flag("--json", common.json, "emit a JSON document instead of text");
  };

  CLI::App* sc_solve = app.add_subcommand("solve", "run the solver on a problem file");
  add_problem(sc_solve);
  sc_solve->add_option("--eps", params.eps, "termination tolerance on E");
  sc_solve->add_option("--theta", params.theta0, "initial branch threshold");
  sc_solve->add_option("--mu", params.mu, "theta decay factor");
  sc_solve->add_option("--delta", params.delta, "Armijo slope fraction");
  sc_solve->add_option("--eta", params.eta, "backtracking factor");
  sc_solve->add_option("--alpha", params.alpha, "gradient step scale");
  sc_solve->add_option("--gamma", params.gamma, "undecided multiplier exponent");
  sc_solve->add_option("--beta", params.beta, "undecided slack exponent");
  sc_solve->add_option("--max-iter", params.max_iter, "iteration cap");
  sc_solve->add_option("--trace", trace_path, "write the per-iteration trace CSV here");
  sc_solve->add_option("--diagnostics", diag_path, "write known-solution diagnostics CSV here");
  sc_solve->add_option("--xstar", xstar_text, "known solution, required by --diagnostics");

  CLI::App* sc_project = app.add_subcommand("project", "project a point onto the polyhedron");
  add_problem(sc_project);
  sc_project->add_option("--point", common.point_text, "point to project (defaults to x0)");

  CLI::App* sc_check = app.add_subcommand("check", "report E, e, active and undecided sets");
  add_problem(sc_check);
  sc_check->add_option("--point", common.point_text, "point to inspect (defaults to x0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (sc_solve->parsed()) return cmd_solve(common, params, trace_path, diag_path, xstar_text);
    if (sc_project->parsed()) return cmd_project(common);
    return cmd_check(common, params);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const LineSearchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLineSearch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace pasa::cli
