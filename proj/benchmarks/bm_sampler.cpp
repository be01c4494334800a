#include <benchmark/benchmark.h>

#include "gibbsnet/baseline.hpp"
#include "gibbsnet/sampler.hpp"
#include "gibbsnet/topology.hpp"

using namespace gibbsnet;

// Whole ticks of the timer-driven chain, including candidate evaluation.
static void BM_SamplerTicks(benchmark::State& state) {
    TopologyConfig cfg;
    cfg.n_users = static_cast<int>(state.range(0));
    cfg.n_channels = static_cast<int>(state.range(1));
    cfg.seed = 1;
    const NetworkScene scene = generate_scene(cfg);
    const NetworkState init = default_configuration(scene);

    SamplerConfig sampler;
    sampler.max_ticks = 10;
    sampler.temperature = 0.02;
    sampler.record_trace = false;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        sampler.seed = ++seed;
        benchmark::DoNotOptimize(run(scene, init, sampler).final_state);
    }
    state.SetItemsProcessed(state.iterations() * sampler.max_ticks);
}
BENCHMARK(BM_SamplerTicks)->Args({32, 1})->Args({64, 2})->Args({160, 5});

BENCHMARK_MAIN();
