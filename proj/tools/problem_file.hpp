#pragma once

#include <iosfwd>
#include <string>

#include "pasa/objective.hpp"
#include "pasa/polyhedron.hpp"

namespace pasa::cli {

/// Parse failure; the message names the offending line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// In-memory form of the `pasa-problem v1` file format.
struct ProblemFile {
  enum class Kind { quadratic, rosenbrock };

  int n = 0;
  int m = 0;
  Matrix a;  // m x n, absent rows when m = 0
  Vector b;
  Kind kind = Kind::quadratic;
  Matrix q;  // quadratic only
  Vector c;
  Vector x0;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);

/// Emit in the same grammar with 17 significant digits, so that a
/// parse/emit/parse round trip reproduces every matrix bit for bit.
std::string emit_problem(const ProblemFile& pf);

Objective make_objective(const ProblemFile& pf);
Polyhedron make_polyhedron(const ProblemFile& pf);

}  // namespace pasa::cli
