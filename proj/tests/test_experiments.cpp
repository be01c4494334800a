#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "gibbsnet/experiments.hpp"

using namespace gibbsnet;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.topology.n_users = 6;
    cfg.topology.n_small = 4;
    cfg.topology.n_channels = 2;
    cfg.topology.seed = 11;
    cfg.sampler.max_ticks = 30;
    cfg.sampler.temperature = 0.05;
    cfg.sampler.seed = 12;
    cfg.greedy_finish_ticks = 10;
    cfg.replications = 3;
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_CASE("replication results do not depend on how many follow") {
    ExperimentConfig cfg = small_config();
    const ComparisonSummary three = run_comparison(cfg);
    cfg.replications = 5;
    const ComparisonSummary five = run_comparison(cfg);

    REQUIRE(three.rows.size() == 3);
    REQUIRE(five.rows.size() == 5);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(three.rows[i].baseline_metrics.global_energy ==
              five.rows[i].baseline_metrics.global_energy);
        CHECK(three.rows[i].optimized_metrics.global_energy ==
              five.rows[i].optimized_metrics.global_energy);
        CHECK(three.rows[i].optimized_metrics.sum_throughput ==
              five.rows[i].optimized_metrics.sum_throughput);
    }
}

TEST_CASE("thread count does not change the output") {
    ExperimentConfig cfg = small_config();
    cfg.threads = 1;
    const std::string a = comparison_csv(run_comparison(cfg));
    cfg.threads = 2;
    const std::string b = comparison_csv(run_comparison(cfg));
    CHECK(a == b);
}

TEST_CASE("comparisons are reproducible byte for byte") {
    ExperimentConfig cfg = small_config();
    cfg.replications = 1;
    const ComparisonSummary a = run_comparison(cfg);
    const ComparisonSummary b = run_comparison(cfg);
    CHECK(comparison_csv(a) == comparison_csv(b));
    CHECK(comparison_json(a) == comparison_json(b));
}

TEST_CASE("optimization beats the default on average") {
    ExperimentConfig cfg = small_config();
    cfg.replications = 6;
    cfg.sampler.max_ticks = 120;
    cfg.greedy_finish_ticks = 40;
    const ComparisonSummary summary = run_comparison(cfg);
    CHECK(summary.throughput_gain > 1.0);
    CHECK(summary.efficiency_gain > 1.0);
    CHECK(summary.mean_optimized.global_energy < summary.mean_baseline.global_energy);
}

TEST_CASE("baseline mode leaves the metrics unchanged") {
    ExperimentConfig cfg = small_config();
    cfg.optimizer = OptimizerMode::baseline;
    const ComparisonSummary summary = run_comparison(cfg);
    CHECK(summary.throughput_gain == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(summary.efficiency_gain == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& row : summary.rows)
        CHECK(row.baseline_metrics.global_energy == row.optimized_metrics.global_energy);
}

TEST_CASE("invalid replication counts fault") {
    ExperimentConfig cfg = small_config();
    cfg.replications = 0;
    CHECK_THROWS_AS(run_comparison(cfg), std::invalid_argument);
}

TEST_CASE("traces carry the documented header and greedy descent is monotone") {
    ExperimentConfig cfg = small_config();
    cfg.optimizer = OptimizerMode::greedy;
    cfg.sampler.max_ticks = 60;
    const std::vector<TraceRow> trace = run_trace(cfg);
    REQUIRE(trace.size() == 61u);

    const std::string csv = trace_csv(trace);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "tick,global_energy,potential_delay,sum_throughput");

    for (std::size_t i = 1; i < trace.size(); ++i)
        CHECK(trace[i].global_energy <=
              trace[i - 1].global_energy * (1.0 + 1e-12) + 1e-12);

    // Row count: one line per tick plus header and initial row.
    int lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 61);
}

TEST_CASE("baseline traces are flat") {
    ExperimentConfig cfg = small_config();
    cfg.optimizer = OptimizerMode::baseline;
    const std::vector<TraceRow> trace = run_trace(cfg);
    REQUIRE(trace.size() == 1u);
    CHECK(trace[0].tick == 0);
}
