#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gibbsnet/sampler.hpp"
#include "gibbsnet/scene.hpp"

namespace gibbsnet {

// One performance snapshot, computed from exact full-sum SINR.
struct MetricsRecord {
    double sum_throughput = 0.0;        // b/s/Hz
    double mean_user_throughput = 0.0;  // b/s/Hz
    double power_efficiency = 0.0;      // b/s/Hz/W, sum throughput over total watts
    double potential_delay = 0.0;
    double global_energy = 0.0;
    double min_user_rate = 0.0;
    double total_power_w = 0.0;
};

MetricsRecord snapshot(const NetworkState& state, const NetworkScene& scene);

// Aggregated signaling traffic for a transition log. Uplink items are what
// the transitioning user reports over the air; backhaul items are what each
// neighbor's serving BS relays to its implicit neighbors, counted once per
// link they traverse.
struct MessageTally {
    std::vector<std::uint64_t> uplink_per_user;
    std::uint64_t uplink_noise = 0;
    std::uint64_t uplink_interference = 0;
    std::uint64_t uplink_pathloss = 0;
    std::map<std::pair<int, int>, std::uint64_t> backhaul;  // key: (min BS, max BS)

    std::uint64_t uplink_total() const;
    std::uint64_t backhaul_total() const;
    std::uint64_t backhaul_between(int b, int bp) const;
};

MessageTally tally_messages(const NetworkScene& scene, double theta_w,
                            const TransitionLog& log);

// Emission with a stable column schema (see README).
std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsRecord& rec);
std::string metrics_json(const MetricsRecord& rec);

}  // namespace gibbsnet
