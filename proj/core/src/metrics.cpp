#include "gibbsnet/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "gibbsnet/energy.hpp"
#include "gibbsnet/topology.hpp"

#include "json.hpp"

namespace gibbsnet {

MetricsRecord snapshot(const NetworkState& state, const NetworkScene& scene) {
    MetricsRecord rec;
    const std::size_t n = scene.user_count();
    if (n == 0) return rec;

    rec.min_user_rate = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < n; ++u) {
        const double r = rate(static_cast<int>(u), state, scene);
        rec.sum_throughput += r;
        rec.min_user_rate = std::min(rec.min_user_rate, r);
        rec.total_power_w += state[u].power_w;
    }
    rec.mean_user_throughput = rec.sum_throughput / static_cast<double>(n);
    rec.power_efficiency =
        rec.total_power_w > 0.0 ? rec.sum_throughput / rec.total_power_w : 0.0;
    rec.potential_delay = potential_delay(state, scene);
    rec.global_energy = global_energy(state, scene);
    return rec;
}

std::uint64_t MessageTally::uplink_total() const {
    return uplink_noise + uplink_interference + uplink_pathloss;
}

std::uint64_t MessageTally::backhaul_total() const {
    std::uint64_t total = 0;
    for (const auto& [key, count] : backhaul) total += count;
    return total;
}

std::uint64_t MessageTally::backhaul_between(int b, int bp) const {
    const auto key = std::minmax(b, bp);
    const auto it = backhaul.find({key.first, key.second});
    return it == backhaul.end() ? 0 : it->second;
}

MessageTally tally_messages(const NetworkScene& scene, double theta_w,
                            const TransitionLog& log) {
    MessageTally tally;
    tally.uplink_per_user.assign(scene.user_count(), 0);

    std::vector<std::vector<int>> impl_adj(scene.station_count());
    for (const auto& [b, bp] : implicit_neighbors(scene, theta_w)) {
        impl_adj[b].push_back(bp);
        impl_adj[bp].push_back(b);
    }

    // Replay the trajectory so each neighbor's serving BS is known at the
    // time of the transition.
    NetworkState state = log.initial_state;
    const std::uint64_t n_ch = static_cast<std::uint64_t>(scene.n_channels);
    for (const Transition& tr : log.entries) {
        const UserTerminal& ut = scene.users[tr.user];
        const std::uint64_t n_cand = ut.candidate_bs.size();
        tally.uplink_per_user[tr.user] += n_ch + 2 * n_ch * n_cand;
        tally.uplink_noise += n_ch;
        tally.uplink_interference += n_ch * n_cand;
        tally.uplink_pathloss += n_ch * n_cand;

        const std::uint64_t items_per_neighbor = 1 + n_ch * n_cand;
        for (int v : ut.neighbors) {
            const int bv = state[v].bs;
            for (int bp : impl_adj[bv]) {
                const auto key = std::minmax(bv, bp);
                tally.backhaul[{key.first, key.second}] += items_per_neighbor;
            }
        }
        state[tr.user] = tr.new_state;
    }
    return tally;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string metrics_csv_header() {
    return "sum_throughput,mean_user_throughput,power_efficiency,potential_delay,"
           "global_energy,min_user_rate,total_power_w";
}

std::string metrics_csv_row(const MetricsRecord& rec) {
    return fmt(rec.sum_throughput) + "," + fmt(rec.mean_user_throughput) + "," +
           fmt(rec.power_efficiency) + "," + fmt(rec.potential_delay) + "," +
           fmt(rec.global_energy) + "," + fmt(rec.min_user_rate) + "," +
           fmt(rec.total_power_w);
}

std::string metrics_json(const MetricsRecord& rec) {
    nlohmann::json j;
    j["sum_throughput"] = rec.sum_throughput;
    j["mean_user_throughput"] = rec.mean_user_throughput;
    j["power_efficiency"] = rec.power_efficiency;
    j["potential_delay"] = rec.potential_delay;
    j["global_energy"] = rec.global_energy;
    j["min_user_rate"] = rec.min_user_rate;
    j["total_power_w"] = rec.total_power_w;
    return j.dump(2);
}

}  // namespace gibbsnet
