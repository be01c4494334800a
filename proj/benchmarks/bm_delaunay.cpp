#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gibbsnet/delaunay.hpp"

using namespace gibbsnet;

static void BM_Delaunay(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(0.0, 1000.0);
    std::vector<Vec2> pts(state.range(0));
    for (Vec2& p : pts) p = {coord(rng), coord(rng)};
    for (auto _ : state) benchmark::DoNotOptimize(delaunay(pts).triangles.size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Delaunay)->Arg(100)->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
