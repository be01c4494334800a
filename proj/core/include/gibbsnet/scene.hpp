#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gibbsnet/geometry.hpp"

namespace gibbsnet {

enum class BsKind { macro, small };

struct BaseStation {
    int id = 0;
    Vec2 position;
    BsKind kind = BsKind::macro;
    double max_power_w = 0.0;    // top of the discrete transmit power grid
    double pilot_power_w = 0.0;  // broadcast pilot, drives association and neighbor discovery
};

// Discrete transmit power grid {step, 2*step, ..., max_power}. Zero power is
// excluded: the energy function divides by the transmit power.
struct PowerGrid {
    double step_w = 0.1;

    int levels(double max_power_w) const;
    double level(double max_power_w, int index) const;
    // Index of an exact grid level, -1 if power_w is not on the grid.
    int index_of(double max_power_w, double power_w) const;
};

struct UserTerminal {
    int id = 0;
    Vec2 position;
    std::vector<int> candidate_bs;  // sorted ascending, never empty
    std::vector<int> neighbors;     // sorted ascending, symmetric across users
    std::vector<double> noise_w;    // per channel, strictly positive
};

// Orthogonality factor alpha(b, b', c, c') in [0, 1] between a link served by
// BS b on channel c and one served by b' on c'. The default keeps co-channel
// interference in full and drops cross-channel interference. A custom factor
// may be supplied for experiments; it must satisfy the symmetry
// alpha(b,b',c,c') == alpha(b',b,c',c).
struct Orthogonality {
    double co_channel = 1.0;
    double cross_channel = 0.0;
    std::function<double(int, int, int, int)> custom;

    double operator()(int b, int bp, int c, int cp) const {
        if (custom) return custom(b, bp, c, cp);
        return c == cp ? co_channel : cross_channel;
    }
};

// Immutable deployment: geometry, radio environment and the interference
// graphs. Safe to share read-only across threads.
struct NetworkScene {
    double window_w = 1000.0;  // meters
    double window_h = 650.0;   // meters
    std::vector<BaseStation> stations;
    std::vector<UserTerminal> users;
    int n_channels = 1;
    PowerGrid grid;
    Orthogonality alpha;
    double rate_scale = 1.0;  // multiplies log2(1 + sinr)
    double theta_w = 1e-13;   // pilot threshold the stored graphs were built with
    // Linear gain per (station, user, channel), station-major then user.
    // Strictly positive, at most 1.
    std::vector<double> attenuation;

    std::size_t station_count() const { return stations.size(); }
    std::size_t user_count() const { return users.size(); }

    double gain(int bs, int user, int channel) const {
        return attenuation[(static_cast<std::size_t>(bs) * users.size() +
                            static_cast<std::size_t>(user)) *
                               static_cast<std::size_t>(n_channels) +
                           static_cast<std::size_t>(channel)];
    }
    double& gain_ref(int bs, int user, int channel) {
        return attenuation[(static_cast<std::size_t>(bs) * users.size() +
                            static_cast<std::size_t>(user)) *
                               static_cast<std::size_t>(n_channels) +
                           static_cast<std::size_t>(channel)];
    }

    int power_levels(int bs) const { return grid.levels(stations[bs].max_power_w); }
    double power_level(int bs, int index) const {
        return grid.level(stations[bs].max_power_w, index);
    }

    // Received pilot power from bs at user, maximum over channels.
    double received_pilot(int bs, int user) const;

    // Checks every structural invariant; throws std::invalid_argument on the
    // first violation.
    void validate() const;
};

// The optimization variable of one user: serving BS, channel and transmit
// power. Power is a grid level of the serving BS, in watts.
struct UserState {
    int bs = 0;
    int channel = 0;
    double power_w = 0.0;

    bool operator==(const UserState&) const = default;
};

using NetworkState = std::vector<UserState>;

// Throws std::invalid_argument if the state is not valid for the scene.
void validate_state(const NetworkState& state, const NetworkScene& scene);

}  // namespace gibbsnet
