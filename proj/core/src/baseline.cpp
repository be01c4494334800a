#include "gibbsnet/baseline.hpp"

#include <vector>

namespace gibbsnet {

NetworkState default_configuration(const NetworkScene& scene) {
    NetworkState state(scene.user_count());
    std::vector<int> next_channel(scene.station_count(), 0);

    for (std::size_t u = 0; u < scene.user_count(); ++u) {
        int best = -1;
        double best_p = -1.0;
        for (int b : scene.users[u].candidate_bs) {
            const double p = scene.received_pilot(b, static_cast<int>(u));
            if (p > best_p) {
                best_p = p;
                best = b;
            }
        }
        const int levels = scene.power_levels(best);
        state[u].bs = best;
        state[u].channel = next_channel[best];
        state[u].power_w = scene.power_level(best, levels - 1);
        next_channel[best] = (next_channel[best] + 1) % scene.n_channels;
    }
    return state;
}

}  // namespace gibbsnet
