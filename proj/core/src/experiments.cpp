#include "gibbsnet/experiments.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "gibbsnet/baseline.hpp"
#include "gibbsnet/random.hpp"

#include "json.hpp"

namespace gibbsnet {

namespace {

MetricsRecord mean_of(const std::vector<ComparisonRow>& rows, bool optimized) {
    MetricsRecord mean;
    if (rows.empty()) return mean;
    for (const ComparisonRow& row : rows) {
        const MetricsRecord& r = optimized ? row.optimized_metrics : row.baseline_metrics;
        mean.sum_throughput += r.sum_throughput;
        mean.mean_user_throughput += r.mean_user_throughput;
        mean.power_efficiency += r.power_efficiency;
        mean.potential_delay += r.potential_delay;
        mean.global_energy += r.global_energy;
        mean.min_user_rate += r.min_user_rate;
        mean.total_power_w += r.total_power_w;
    }
    const double n = static_cast<double>(rows.size());
    mean.sum_throughput /= n;
    mean.mean_user_throughput /= n;
    mean.power_efficiency /= n;
    mean.potential_delay /= n;
    mean.global_energy /= n;
    mean.min_user_rate /= n;
    mean.total_power_w /= n;
    return mean;
}

NetworkState optimize(const NetworkScene& scene, const NetworkState& init,
                      const ExperimentConfig& cfg, std::uint64_t chain_seed) {
    if (cfg.optimizer == OptimizerMode::baseline) return init;

    SamplerConfig phase = cfg.sampler;
    phase.seed = chain_seed;
    phase.record_trace = false;
    if (cfg.optimizer == OptimizerMode::greedy) phase.mode = SamplerMode::greedy;

    NetworkState state = run(scene, init, phase).final_state;

    if (cfg.optimizer == OptimizerMode::gibbs && cfg.greedy_finish_ticks > 0) {
        SamplerConfig finish = phase;
        finish.mode = SamplerMode::greedy;
        finish.schedule = TemperatureSchedule::fixed;
        finish.temperature = cfg.sampler.temperature > 0.0 ? cfg.sampler.temperature : 1.0;
        finish.max_ticks = cfg.greedy_finish_ticks;
        finish.seed = derive_seed(chain_seed, 0x9d5f);
        state = run(scene, state, finish).final_state;
    }
    return state;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ComparisonSummary run_comparison(const ExperimentConfig& cfg) {
    if (cfg.replications < 1) throw std::invalid_argument("replications must be at least 1");

    ComparisonSummary summary;
    summary.rows.resize(cfg.replications);

    auto one = [&](int i) {
        TopologyConfig topo = cfg.topology;
        topo.seed = derive_seed(cfg.topology.seed, static_cast<std::uint64_t>(i));
        const NetworkScene scene = generate_scene(topo);
        const NetworkState base = default_configuration(scene);
        const NetworkState opt =
            optimize(scene, base, cfg, derive_seed(cfg.sampler.seed, static_cast<std::uint64_t>(i)));
        summary.rows[i] = {i, snapshot(base, scene), snapshot(opt, scene)};
    };

    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::thread::hardware_concurrency();
    n_threads = std::max(1u, std::min<unsigned>(n_threads, cfg.replications));
    if (n_threads == 1) {
        for (int i = 0; i < cfg.replications; ++i) one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < cfg.replications; i = next.fetch_add(1))
                    one(i);
            });
        for (std::thread& t : pool) t.join();
    }

    summary.mean_baseline = mean_of(summary.rows, false);
    summary.mean_optimized = mean_of(summary.rows, true);
    summary.throughput_gain = summary.mean_baseline.mean_user_throughput > 0.0
                                  ? summary.mean_optimized.mean_user_throughput /
                                        summary.mean_baseline.mean_user_throughput
                                  : 0.0;
    summary.efficiency_gain = summary.mean_baseline.power_efficiency > 0.0
                                  ? summary.mean_optimized.power_efficiency /
                                        summary.mean_baseline.power_efficiency
                                  : 0.0;
    return summary;
}

std::vector<TraceRow> run_trace(const ExperimentConfig& cfg) {
    const NetworkScene scene = generate_scene(cfg.topology);
    const NetworkState base = default_configuration(scene);

    if (cfg.optimizer == OptimizerMode::baseline) {
        SamplerConfig idle = cfg.sampler;
        idle.max_ticks = 0;
        return run(scene, base, idle).trace;
    }
    SamplerConfig phase = cfg.sampler;
    phase.record_trace = true;
    if (cfg.optimizer == OptimizerMode::greedy) phase.mode = SamplerMode::greedy;
    return run(scene, base, phase).trace;
}

std::string comparison_csv(const ComparisonSummary& summary) {
    std::string out = "replication,side," + metrics_csv_header() + "\n";
    for (const ComparisonRow& row : summary.rows) {
        out += std::to_string(row.replication) + ",baseline," +
               metrics_csv_row(row.baseline_metrics) + "\n";
        out += std::to_string(row.replication) + ",optimized," +
               metrics_csv_row(row.optimized_metrics) + "\n";
    }
    return out;
}

std::string comparison_json(const ComparisonSummary& summary) {
    nlohmann::json j;
    j["replications"] = summary.rows.size();
    j["mean_baseline"] = nlohmann::json::parse(metrics_json(summary.mean_baseline));
    j["mean_optimized"] = nlohmann::json::parse(metrics_json(summary.mean_optimized));
    j["throughput_gain"] = summary.throughput_gain;
    j["efficiency_gain"] = summary.efficiency_gain;
    return j.dump(2);
}

std::string trace_csv(const std::vector<TraceRow>& trace) {
    std::string out = "tick,global_energy,potential_delay,sum_throughput\n";
    for (const TraceRow& row : trace) {
        out += std::to_string(row.tick) + "," + fmt(row.global_energy) + "," +
               fmt(row.potential_delay) + "," + fmt(row.sum_throughput) + "\n";
    }
    return out;
}

}  // namespace gibbsnet
