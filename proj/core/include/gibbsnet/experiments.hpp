#pragma once

#include <string>
#include <vector>

#include "gibbsnet/metrics.hpp"
#include "gibbsnet/sampler.hpp"
#include "gibbsnet/topology.hpp"

namespace gibbsnet {

enum class OptimizerMode { gibbs, greedy, baseline };

struct ExperimentConfig {
    TopologyConfig topology;
    SamplerConfig sampler;  // main optimization phase
    OptimizerMode optimizer = OptimizerMode::gibbs;
    int greedy_finish_ticks = 100;  // descent appended after a gibbs phase
    int replications = 100;
    int threads = 0;  // 0 picks the hardware concurrency
};

struct ComparisonRow {
    int replication = 0;
    MetricsRecord baseline_metrics;
    MetricsRecord optimized_metrics;
};

struct ComparisonSummary {
    std::vector<ComparisonRow> rows;
    MetricsRecord mean_baseline;
    MetricsRecord mean_optimized;
    double throughput_gain = 0.0;  // mean user throughput, optimized over baseline
    double efficiency_gain = 0.0;  // power efficiency, optimized over baseline
};

// For each replication: generate a scene, compute the default-operation
// metrics, optimize starting from that state, and compute the optimized
// metrics. Replications use derived seeds, so results for replication i do
// not depend on how many replications follow. Thread scheduling does not
// affect the output.
ComparisonSummary run_comparison(const ExperimentConfig& cfg);

// One scene, one run of the configured mode; per-tick trace rows.
std::vector<TraceRow> run_trace(const ExperimentConfig& cfg);

std::string comparison_csv(const ComparisonSummary& summary);
std::string comparison_json(const ComparisonSummary& summary);
std::string trace_csv(const std::vector<TraceRow>& trace);

}  // namespace gibbsnet
