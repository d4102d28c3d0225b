#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "copos/combinatorics.hpp"
#include "copos/eigen_sym.hpp"
#include "copos/graph_catalog.hpp"
#include "copos/lp_hierarchy.hpp"
#include "copos/solver.hpp"
#include "copos/sos.hpp"

namespace {

copos::Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<copos::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return copos::Graph(n, edges);
}

void BM_StabilityNumber(benchmark::State& state) {
  const copos::Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7u);
  for (auto _ : state) benchmark::DoNotOptimize(copos::stability_number(g));
}
BENCHMARK(BM_StabilityNumber)->Arg(20)->Arg(40)->Arg(60);

void BM_Zeta(benchmark::State& state) {
  const copos::Graph g = copos::catalog::petersen();
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(copos::zeta(g, r));
}
BENCHMARK(BM_Zeta)->DenseRange(1, 4);

void BM_SymEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(11u);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = nd(rng);
  for (auto _ : state) benchmark::DoNotOptimize(copos::sym_eigen(a));
}
BENCHMARK(BM_SymEigen)->RangeMultiplier(2)->Range(8, 128);

void BM_CompileTheta(benchmark::State& state) {
  const copos::Graph g = copos::catalog::icosahedron_complement();
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(copos::compile_theta(g, r));
}
BENCHMARK(BM_CompileTheta)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveTheta(benchmark::State& state) {
  const copos::Graph g = state.range(0) == 0 ? copos::catalog::cycle(5) : copos::catalog::petersen();
  const copos::SosProgram sp = copos::compile_theta(g, 1);
  const copos::SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(copos::solve(sp.program, cfg));
}
BENCHMARK(BM_SolveTheta)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
