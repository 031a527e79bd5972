#include <benchmark/benchmark.h>

#include <vector>

#include "pnspace/nnorm.hpp"
#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"
#include "pnspace/triangle.hpp"

namespace {

using namespace pnspace;

std::vector<DistFn> random_pool(int count, int max_knots) {
  Rng rng(99);
  std::vector<DistFn> pool;
  for (int i = 0; i < count; ++i) pool.push_back(random_delta_plus(rng, 2.0, max_knots));
  return pool;
}

void BM_SibleyDistance(benchmark::State& state) {
  const auto pool = random_pool(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sibley::distance(pool[i % 64], pool[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_SibleyDistance)->Arg(5)->Arg(50)->Arg(500);

void BM_TauMinExact(benchmark::State& state) {
  const auto pool = random_pool(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_min_exact(pool[i % 64], pool[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_TauMinExact)->Arg(5)->Arg(50);

void BM_TauGrid(benchmark::State& state) {
  const auto pool = random_pool(16, 5);
  TriangleOp op;
  op.base = TNorm::product();
  op.grid_resolution = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_grid(op, pool[i % 16], pool[(i + 1) % 16]));
    ++i;
  }
}
BENCHMARK(BM_TauGrid)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_GramNNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NNormSpace space(8, n);
  Rng rng(7);
  std::vector<Vector> tuple;
  for (int k = 0; k < n; ++k) tuple.push_back(random_vector(rng, 8));
  for (auto _ : state) benchmark::DoNotOptimize(gram_nnorm(space, tuple));
}
BENCHMARK(BM_GramNNorm)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
