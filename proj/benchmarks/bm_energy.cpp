#include <benchmark/benchmark.h>

#include "gibbsnet/baseline.hpp"
#include "gibbsnet/energy.hpp"
#include "gibbsnet/topology.hpp"

using namespace gibbsnet;

static void BM_GlobalEnergy(benchmark::State& state) {
    TopologyConfig cfg;
    cfg.n_users = static_cast<int>(state.range(0));
    cfg.n_channels = 2;
    cfg.seed = 1;
    const NetworkScene scene = generate_scene(cfg);
    const NetworkState st = default_configuration(scene);
    for (auto _ : state) benchmark::DoNotOptimize(global_energy(st, scene));
}
BENCHMARK(BM_GlobalEnergy)->Arg(32)->Arg(160);

static void BM_LocalEnergy(benchmark::State& state) {
    TopologyConfig cfg;
    cfg.n_users = static_cast<int>(state.range(0));
    cfg.n_channels = 2;
    cfg.seed = 1;
    const NetworkScene scene = generate_scene(cfg);
    const NetworkState st = default_configuration(scene);
    for (auto _ : state) benchmark::DoNotOptimize(local_energy(0, st, scene).total);
}
BENCHMARK(BM_LocalEnergy)->Arg(32)->Arg(160);

BENCHMARK_MAIN();
