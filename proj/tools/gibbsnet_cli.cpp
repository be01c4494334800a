// gibbsnet command-line runner: baseline-vs-optimized comparisons,
// convergence traces, overhead reports and scene round-trips.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gibbsnet/gibbsnet.hpp"
#include "gibbsnet/random.hpp"

namespace {

using namespace gibbsnet;

struct CommonFlags {
    std::uint64_t seed = 1;
    int users = 32;
    int channels = 1;
    int small_cells = 30;
    double theta = 1e-13;
    double sigma = 4.0;
    double temperature = 0.02;
    bool anneal = false;
    std::string mode = "gibbs";
    int ticks = 300;
    int finish_ticks = 100;
};

void add_topology_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--seed", f.seed, "Master seed");
    cmd->add_option("--users", f.users, "Number of users (M)");
    cmd->add_option("--channels", f.channels, "Number of orthogonal channels (K)");
    cmd->add_option("--small-cells", f.small_cells, "Number of small-cell stations");
    cmd->add_option("--theta", f.theta, "Pilot detection threshold in watts");
    cmd->add_option("--sigma", f.sigma, "Shadowing standard deviation in dB");
}

void add_sampler_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--ticks", f.ticks, "Sampler ticks for the main phase");
    cmd->add_option("--finish-ticks", f.finish_ticks,
                    "Greedy descent ticks appended after a gibbs phase");
    cmd->add_option("--temperature", f.temperature, "Fixed temperature");
    cmd->add_flag("--anneal", f.anneal, "Use the annealed schedule 1/ln(2 + t)");
    cmd->add_option("--mode", f.mode, "Optimizer: gibbs, greedy or baseline")
        ->check(CLI::IsMember({"gibbs", "greedy", "baseline"}));
}

ExperimentConfig make_config(const CommonFlags& f) {
    ExperimentConfig cfg;
    cfg.topology.n_users = f.users;
    cfg.topology.n_channels = f.channels;
    cfg.topology.n_small = f.small_cells;
    cfg.topology.theta_w = f.theta;
    cfg.topology.shadowing_sigma_db = f.sigma;
    cfg.topology.seed = derive_seed(f.seed, 101);
    cfg.sampler.temperature = f.temperature;
    cfg.sampler.schedule = f.anneal ? TemperatureSchedule::annealed : TemperatureSchedule::fixed;
    cfg.sampler.max_ticks = f.ticks;
    cfg.sampler.seed = derive_seed(f.seed, 202);
    cfg.greedy_finish_ticks = f.finish_ticks;
    if (f.mode == "greedy")
        cfg.optimizer = OptimizerMode::greedy;
    else if (f.mode == "baseline")
        cfg.optimizer = OptimizerMode::baseline;
    return cfg;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

int cmd_compare(const CommonFlags& f, int replications, int threads, const std::string& out) {
    ExperimentConfig cfg = make_config(f);
    cfg.replications = replications;
    cfg.threads = threads;
    const ComparisonSummary summary = run_comparison(cfg);

    std::printf("replications: %zu  (M = %d, K = %d, BS = %d)\n", summary.rows.size(),
                f.users, f.channels, f.small_cells + 2);
    std::printf("%-24s %14s %14s %10s\n", "metric", "default", "optimized", "gain");
    std::printf("%-24s %14.4f %14.4f %9.2fx\n", "mean user throughput",
                summary.mean_baseline.mean_user_throughput,
                summary.mean_optimized.mean_user_throughput, summary.throughput_gain);
    std::printf("%-24s %14.4f %14.4f %9.2fx\n", "power efficiency",
                summary.mean_baseline.power_efficiency,
                summary.mean_optimized.power_efficiency, summary.efficiency_gain);
    std::printf("%-24s %14.4f %14.4f\n", "global energy",
                summary.mean_baseline.global_energy, summary.mean_optimized.global_energy);

    if (!out.empty()) {
        write_file(out + "_replications.csv", comparison_csv(summary));
        write_file(out + "_summary.json", comparison_json(summary));
        std::printf("wrote %s_replications.csv and %s_summary.json\n", out.c_str(), out.c_str());
    }
    return 0;
}

int cmd_trace(const CommonFlags& f, const std::string& out) {
    ExperimentConfig cfg = make_config(f);
    const std::string csv = trace_csv(run_trace(cfg));
    if (out.empty())
        std::fputs(csv.c_str(), stdout);
    else {
        write_file(out, csv);
        std::printf("wrote %s\n", out.c_str());
    }
    return 0;
}

int cmd_overhead(const OverheadParams& params, bool empirical, int replications,
                 std::uint64_t seed, const std::string& out) {
    nlohmann::json j;
    const bool hetero = params.lambda_small > 0.0;
    const OverheadReport rep = hetero ? hetero_overhead(params) : macro_overhead(params);

    std::printf("%-34s %12s\n", "quantity", "analytic");
    std::printf("%-34s %12.4f\n", "mean users per macro cell", rep.users_per_cell);
    std::printf("%-34s %12.4f\n", "uplink overhead R (msg/s)", rep.uplink_mean);
    std::printf("%-34s %12.4f\n", "uplink Cauchy-Schwarz bound", rep.uplink_bound);
    std::printf("%-34s %12.4f\n", "backhaul per Delaunay edge B", rep.backhaul_mean);
    j["analytic"] = {{"users_per_cell", rep.users_per_cell},
                     {"users_per_cell_second_moment", rep.users_per_cell_second_moment},
                     {"uplink_mean", rep.uplink_mean},
                     {"uplink_bound", rep.uplink_bound},
                     {"backhaul_mean", rep.backhaul_mean}};
    if (hetero) {
        std::printf("%-34s %12.4f\n", "mean users per small cell", rep.mean_users_small);
        std::printf("%-34s %12.4f\n", "mean users per macro (hetero)", rep.mean_users_macro);
        std::printf("%-34s %12.4f\n", "small neighbors of a macro", rep.small_neighbors_of_macro);
        std::printf("%-34s %12.4f\n", "uplink on a macro cell", rep.uplink_macro);
        std::printf("%-34s %12.4f\n", "uplink on a small cell", rep.uplink_small);
        std::printf("%-34s %12.4f\n", "backhaul macro-macro", rep.backhaul_macro_macro);
        std::printf("%-34s %12.4f\n", "backhaul macro-small", rep.backhaul_macro_small);
        if (rep.sparsity_warning)
            std::printf("warning: Boolean coverage %.3f exceeds the sparse regime (%.2f)\n",
                        rep.boolean_coverage, kBooleanSparsityThreshold);
        j["analytic"]["mean_users_small"] = rep.mean_users_small;
        j["analytic"]["mean_users_macro"] = rep.mean_users_macro;
        j["analytic"]["small_neighbors_of_macro"] = rep.small_neighbors_of_macro;
        j["analytic"]["small_neighbors_of_small"] = rep.small_neighbors_of_small;
        j["analytic"]["uplink_macro"] = rep.uplink_macro;
        j["analytic"]["uplink_small"] = rep.uplink_small;
        j["analytic"]["backhaul_macro_macro"] = rep.backhaul_macro_macro;
        j["analytic"]["backhaul_macro_small"] = rep.backhaul_macro_small;
        j["analytic"]["boolean_coverage"] = rep.boolean_coverage;
        j["analytic"]["sparsity_warning"] = rep.sparsity_warning;
    }

    if (empirical) {
        std::mt19937_64 rng = make_rng(seed);
        const EmpiricalOverhead emp = monte_carlo_overhead(params, replications, rng);
        std::printf("\nempirical (%zu interior nuclei, %zu replications):\n",
                    emp.interior_nuclei, emp.replications);
        std::printf("%-34s %12.4f (expect %.2f)\n", "mean Delaunay neighbors E(N)",
                    emp.mean_degree, kDelaunayMeanNeighbors);
        std::printf("%-34s %12.4f (expect %.3f)\n", "CV(N)", emp.degree_cv,
                    kDelaunayNeighborCV);
        std::printf("%-34s %12.4f (expect %.4f)\n", "E(N^2)", emp.degree_second_moment,
                    kDelaunayNeighborSecondMoment);
        std::printf("%-34s %12.4f (analytic %.4f)\n", "E(M^2)", emp.users_second_moment,
                    rep.users_per_cell_second_moment);
        std::printf("%-34s %12.4f (analytic %.4f)\n", "uplink overhead R", emp.uplink_mean,
                    rep.uplink_mean);
        std::printf("%-34s %12.4f (analytic %.4f)\n", "backhaul per edge B", emp.backhaul_mean,
                    rep.backhaul_mean);
        std::printf("%-34s %12.4f\n", "share of runs under the bound", emp.bound_exceed_fraction);
        j["empirical"] = {{"interior_nuclei", emp.interior_nuclei},
                          {"interior_edges", emp.interior_edges},
                          {"mean_degree", emp.mean_degree},
                          {"degree_cv", emp.degree_cv},
                          {"degree_second_moment", emp.degree_second_moment},
                          {"mean_users", emp.mean_users},
                          {"users_second_moment", emp.users_second_moment},
                          {"uplink_mean", emp.uplink_mean},
                          {"backhaul_mean", emp.backhaul_mean},
                          {"bound_exceed_fraction", emp.bound_exceed_fraction}};
    }

    if (!out.empty()) {
        write_file(out, j.dump(2) + "\n");
        std::printf("wrote %s\n", out.c_str());
    }
    return 0;
}

int cmd_scene_dump(const CommonFlags& f, const std::string& out) {
    ExperimentConfig cfg = make_config(f);
    const NetworkScene scene = generate_scene(cfg.topology);
    save_scene(scene, out);
    std::printf("wrote %s (%zu stations, %zu users, %d channels)\n", out.c_str(),
                scene.station_count(), scene.user_count(), scene.n_channels);
    return 0;
}

int cmd_scene_load(const std::string& in, const std::string& out) {
    const NetworkScene scene = load_scene(in);
    const NetworkState base = default_configuration(scene);
    const MetricsRecord rec = snapshot(base, scene);
    std::printf("loaded %s: %zu stations, %zu users, %d channels\n", in.c_str(),
                scene.station_count(), scene.user_count(), scene.n_channels);
    std::printf("default operation: mean user throughput %.4f b/s/Hz, efficiency %.4f b/s/Hz/W\n",
                rec.mean_user_throughput, rec.power_efficiency);
    if (!out.empty()) {
        save_scene(scene, out);
        std::printf("re-dumped to %s\n", out.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed Gibbs-sampler optimization of heterogeneous cellular networks"};
    app.require_subcommand(1);

    CommonFlags flags;
    int replications = 100;
    int threads = 0;
    std::string out;

    CLI::App* compare = app.add_subcommand(
        "compare", "Baseline vs optimized metrics over seeded random topologies");
    add_topology_flags(compare, flags);
    add_sampler_flags(compare, flags);
    compare->add_option("--replications", replications, "Sampled topologies");
    compare->add_option("--threads", threads, "Worker threads (0 = hardware)");
    compare->add_option("--out", out, "Output path prefix for CSV and JSON");

    CLI::App* trace = app.add_subcommand("trace", "Per-tick convergence trace of one scene");
    add_topology_flags(trace, flags);
    add_sampler_flags(trace, flags);
    trace->add_option("--out", out, "CSV output path (default stdout)");

    CLI::App* overhead =
        app.add_subcommand("overhead", "Analytic and Monte Carlo signaling overhead");
    OverheadParams params;
    bool empirical = false;
    int oh_reps = 4;
    std::uint64_t oh_seed = 1;
    overhead->add_option("--lambda-macro", params.lambda_macro, "Macro intensity per unit area");
    overhead->add_option("--lambda-user", params.lambda_user, "User intensity per unit area");
    overhead->add_option("--lambda-small", params.lambda_small, "Small-cell intensity");
    overhead->add_option("--rho", params.small_radius, "Small-cell coverage radius");
    overhead->add_option("--tau", params.beacon_rate, "Beacon frequency per second");
    overhead->add_option("--window", params.window_w, "Square window side for Monte Carlo");
    overhead->add_option("--margin", params.interior_margin,
                         "Interior margin (negative = 2/sqrt(lambda_macro))");
    overhead->add_flag("--empirical", empirical, "Run the Monte Carlo validator");
    overhead->add_option("--replications", oh_reps, "Monte Carlo replications");
    overhead->add_option("--seed", oh_seed, "Monte Carlo seed");
    overhead->add_option("--out", out, "JSON output path");

    CLI::App* scene = app.add_subcommand("scene", "Dump or load a deployment scene");
    scene->require_subcommand(1);
    CLI::App* dump = scene->add_subcommand("dump", "Generate a scene and write it as JSON");
    add_topology_flags(dump, flags);
    dump->add_option("--out", out, "Scene file path")->required();
    std::string in_path;
    CLI::App* load = scene->add_subcommand("load", "Load a scene file and print a summary");
    load->add_option("--in", in_path, "Scene file path")->required();
    std::string redump;
    load->add_option("--out", redump, "Optional re-dump path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compare->parsed()) return cmd_compare(flags, replications, threads, out);
        if (trace->parsed()) return cmd_trace(flags, out);
        if (overhead->parsed()) {
            params.window_h = params.window_w;
            return cmd_overhead(params, empirical, oh_reps, oh_seed, out);
        }
        if (scene->parsed()) {
            if (dump->parsed()) return cmd_scene_dump(flags, out);
            if (load->parsed()) return cmd_scene_load(in_path, redump);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
