#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "thinfilm/banded.hpp"
#include "thinfilm/operators.hpp"
#include "thinfilm/stepper.hpp"

using namespace thinfilm;

namespace {

FilmState cosine_state(const Grid1D& g, double base, double amp) {
  FilmState s;
  s.heights.resize(g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    s.heights[i] = base + amp * std::cos(M_PI * g.nodes[i] / g.half_length);
  }
  return s;
}

void BM_solve_banded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PentadiagonalSystem sys;
  sys.rows.assign(n, {0.1, -1.0, 4.0, -1.0, 0.1});
  sys.rhs.assign(n, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_banded(sys));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_solve_banded)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_assemble_system(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid1D g = make_grid(1.0, n);
  const FluidParams p = params_from_coefficients(1.0, 1.0, 1.0, 1.5);
  const SolverConfig config;
  const FilmState s = cosine_state(g, 1.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_system(s, g, p, config, 1e-6, s));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_assemble_system)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid1D g = make_grid(1.0, n);
  const FluidParams p = params_from_coefficients(1.0, 1.0, 1.0, 1.5);
  const SolverConfig config;
  const FilmState s = cosine_state(g, 1.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(s, g, p, config, 1e-6));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_step)->Range(64, 1024)->Complexity(benchmark::oN);

void BM_divergence_residual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid1D g = make_grid(1.0, n);
  const FluidParams p = params_from_coefficients(1.0, 1.0, 1.0, 2.0);
  const FilmState s = cosine_state(g, 2.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(divergence_residual(s, g, p));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_divergence_residual)->Range(64, 4096)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
