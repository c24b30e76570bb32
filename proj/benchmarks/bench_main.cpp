#include <benchmark/benchmark.h>

#include <random>

#include "graphsig/chebyshev.hpp"
#include "graphsig/filters.hpp"
#include "graphsig/generators.hpp"
#include "graphsig/nn_graph.hpp"
#include "graphsig/pyramid.hpp"
#include "graphsig/spectral.hpp"

using namespace graphsig;

namespace {

Eigen::MatrixXd random_signal(int n, int cols = 1) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Eigen::MatrixXd f(n, cols);
  for (Eigen::Index i = 0; i < f.size(); ++i) f.data()[i] = d(rng);
  return f;
}

void BM_HeatChebyshev(benchmark::State& state) {
  const Graph g = sensor(static_cast<int>(state.range(0)), 1);
  const double lmax = estimate_lmax(g);
  const auto coeffs = chebyshev_coeffs(design_heat(lmax, 5.0)[0], static_cast<int>(state.range(1)), lmax);
  const Eigen::MatrixXd f = random_signal(g.N());
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_apply(g, coeffs, f));
}
BENCHMARK(BM_HeatChebyshev)->Args({500, 30})->Args({2000, 30})->Args({2000, 60});

void BM_HeatExact(benchmark::State& state) {
  const Graph g = sensor(static_cast<int>(state.range(0)), 1);
  const Eigen::MatrixXd f = random_signal(g.N());
  for (auto _ : state) {
    const Graph fresh = graph_from_weights(g.W());
    const FilterBank fb = design_heat(graph_lmax(fresh), 5.0);
    compute_fourier_basis(fresh);
    benchmark::DoNotOptimize(filter_analysis(fresh, fb, f, FilterMethod::exact()));
  }
}
BENCHMARK(BM_HeatExact)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_KnnGraph(benchmark::State& state) {
  const Eigen::MatrixXd pts = random_signal(static_cast<int>(state.range(0)), 3);
  NnGraphOptions opts;
  opts.strategy = Knn{10};
  for (auto _ : state) benchmark::DoNotOptimize(nn_graph(pts, opts));
}
BENCHMARK(BM_KnnGraph)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_KronReduce(benchmark::State& state) {
  const Graph g = sensor(static_cast<int>(state.range(0)), 2);
  std::vector<int> kept;
  for (int i = 0; i < g.N(); i += 2) kept.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(kron_reduce(g.L(), kept));
}
BENCHMARK(BM_KronReduce)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
