#include <benchmark/benchmark.h>

#include <random>

#include "pasa/projection.hpp"

using namespace pasa;

namespace {

// Box [0,1]^n as 2n inequality rows.
Polyhedron box(int n) {
  Matrix a = Matrix::Zero(2 * n, n);
  Vector b(2 * n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    b[i] = 1.0;
    a(n + i, i) = -1.0;
    b[n + i] = 0.0;
  }
  return Polyhedron(a, b);
}

void bm_project_box(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Polyhedron poly = box(n);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-2.0, 3.0);
  std::vector<Vector> points;
  for (int k = 0; k < 64; ++k) {
    Vector z(n);
    for (int i = 0; i < n; ++i) z[i] = unif(rng);
    points.push_back(z);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    auto result = project(poly, points[k++ % points.size()]);
    benchmark::DoNotOptimize(result.point);
  }
}

void bm_project_simplexish(benchmark::State& state) {
  // Nonnegativity plus one dense coupling row: sum x <= 1.
  const int n = static_cast<int>(state.range(0));
  Matrix a = Matrix::Zero(n + 1, n);
  Vector b = Vector::Zero(n + 1);
  for (int i = 0; i < n; ++i) a(i, i) = -1.0;
  a.row(n).setOnes();
  b[n] = 1.0;
  Polyhedron poly(a, b);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 2.0);
  std::vector<Vector> points;
  for (int k = 0; k < 64; ++k) {
    Vector z(n);
    for (int i = 0; i < n; ++i) z[i] = unif(rng);
    points.push_back(z);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    auto result = project(poly, points[k++ % points.size()]);
    benchmark::DoNotOptimize(result.point);
  }
}

}  // namespace

BENCHMARK(bm_project_box)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(bm_project_simplexish)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
