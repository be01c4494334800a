#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gibbsnet/scene.hpp"

namespace gibbsnet {

struct TopologyConfig {
    double window_w = 1000.0;  // meters
    double window_h = 650.0;   // meters
    std::vector<Vec2> macro_positions = {{250.0, 325.0}, {750.0, 325.0}};
    int n_small = 30;
    int n_users = 32;
    int n_channels = 1;
    double shadowing_sigma_db = 4.0;
    double theta_w = 1e-13;  // pilot detection threshold, -100 dBm
    double macro_power_w = 40.0;
    double small_power_w = 1.0;
    double power_step_w = 0.1;
    double noise_w = 4.0039e-15;  // thermal noise, 290 K over 1 MHz
    double rate_scale = 1.0;
    Orthogonality alpha;
    std::uint64_t seed = 1;
};

// Distance-dependent path loss in dB with a log-normal shadowing sample.
// Distances below one meter are clamped to one meter.
double path_loss_db(double distance_m, double shadow_db);
double path_loss_gain(double distance_m, double shadow_db);

// Per-user association candidates and the user-level interference graph.
struct NeighborGraph {
    std::vector<std::vector<int>> candidates;  // sorted BS ids, never empty
    std::vector<std::vector<int>> neighbors;   // sorted user ids, symmetric
};

// Candidates are the stations whose pilot is received above theta on some
// channel; a user hearing nothing falls back to its strongest station. Two
// users are neighbors when either hears a candidate of the other above theta.
NeighborGraph build_neighbors(const NetworkScene& scene, double theta_w);

// Unordered pairs of distinct stations that must exchange backhaul messages:
// some pair of neighboring users can associate to them and the pilot of one
// is received attenuated (through alpha) above theta at the other's user.
std::vector<std::pair<int, int>> implicit_neighbors(const NetworkScene& scene, double theta_w);

// Draws a full deployment: macros at fixed positions, small cells and users
// uniform in the window, shadowed attenuation frozen per (station, user) pair
// and flat across channels, neighbor graphs built at cfg.theta_w.
NetworkScene generate_scene(const TopologyConfig& cfg, std::mt19937_64& rng);
NetworkScene generate_scene(const TopologyConfig& cfg);

}  // namespace gibbsnet
