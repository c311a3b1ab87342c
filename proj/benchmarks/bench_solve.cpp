#include <benchmark/benchmark.h>

#include "pasa/driver.hpp"
#include "pasa/problems.hpp"

using namespace pasa;

namespace {

Polyhedron box(int n, double lo, double hi) {
  Matrix a = Matrix::Zero(2 * n, n);
  Vector b(2 * n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    b[i] = hi;
    a(n + i, i) = -1.0;
    b[n + i] = -lo;
  }
  return Polyhedron(a, b);
}

void bm_solve_boxqp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix q = Matrix::Identity(n, n);
  Vector c = Vector::Constant(n, -2.0);  // unconstrained minimizer at 2, clipped to 1
  Objective obj = quadratic_objective(q, c);
  Polyhedron poly = box(n, 0.0, 1.0);
  Vector x0 = Vector::Constant(n, 0.5);
  PasaParams params;
  for (auto _ : state) {
    SolveResult result = solve(obj, poly, x0, params);
    benchmark::DoNotOptimize(result.x);
  }
}

void bm_solve_rosenbrock(benchmark::State& state) {
  Objective obj = rosenbrock_objective(2);
  Polyhedron poly = box(2, -2.0, 2.0);
  Vector x0(2);
  x0 << -1.2, 1.0;
  PasaParams params;
  for (auto _ : state) {
    SolveResult result = solve(obj, poly, x0, params);
    benchmark::DoNotOptimize(result.x);
  }
}

}  // namespace

BENCHMARK(bm_solve_boxqp)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(bm_solve_rosenbrock);
BENCHMARK_MAIN();
