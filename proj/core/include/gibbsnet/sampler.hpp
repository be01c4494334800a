#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gibbsnet/scene.hpp"

namespace gibbsnet {

enum class SamplerMode { gibbs, greedy };
enum class TemperatureSchedule { fixed, annealed };

struct SamplerConfig {
    SamplerMode mode = SamplerMode::gibbs;
    TemperatureSchedule schedule = TemperatureSchedule::fixed;
    double temperature = 0.02;  // fixed schedule only; annealed uses 1/ln(2 + tick)
    double tick_seconds = 1.0;
    int max_ticks = 300;
    std::uint64_t seed = 1;
    bool record_trace = true;
};

// Report items generated by one transition, grouped as the protocol lists
// them: the transitioning user uplinks noise, interference and path-loss
// items; each neighbor contributes one received-power item and per-channel
// cross-gain items that travel over the backhaul.
struct MessageCounts {
    std::uint64_t noise_items = 0;
    std::uint64_t interference_items = 0;
    std::uint64_t pathloss_items = 0;
    std::uint64_t received_power_items = 0;
    std::uint64_t cross_gain_items = 0;

    std::uint64_t uplink() const { return noise_items + interference_items + pathloss_items; }
};

struct Transition {
    int tick = 0;
    int user = 0;
    UserState old_state;
    UserState new_state;
    int evaluations = 0;  // local energies computed for this draw, |S_u|
    MessageCounts messages;
};

struct TransitionLog {
    NetworkState initial_state;  // makes the state trajectory replayable
    std::vector<Transition> entries;
};

struct TraceRow {
    int tick = 0;  // 0 is the initial state, before any transition
    double global_energy = 0.0;
    double potential_delay = 0.0;
    double sum_throughput = 0.0;
};

struct RunResult {
    NetworkState final_state;
    TransitionLog log;
    std::vector<TraceRow> trace;
};

// Per-user state space: candidates x channels x power levels, enumerated by
// ascending BS id, then channel id, then ascending power. The order is part
// of the contract (greedy tie-breaking and reproducibility depend on it).
std::vector<UserState> candidate_states(int user, const NetworkScene& scene);

// Normalized Boltzmann weights exp(-e/T) with the minimum energy subtracted
// first. If every weight underflows to zero the distribution is uniform.
std::vector<double> boltzmann_weights(std::span<const double> energies, double temperature);

// Lowest index among the minimizers.
std::size_t greedy_pick(std::span<const double> energies);

// Single-site transition law of one user given everybody else's state:
// probabilities over candidate_states(user, scene), proportional to
// exp(-local_energy / T). Sums to one within 1e-12.
std::vector<double> transition_distribution(int user, const NetworkState& state,
                                            const NetworkScene& scene, double temperature);

// Timer-driven chain: every tick each user's timer is decremented; on expiry
// the user resamples its state from the transition law (or takes the greedy
// minimizer) and draws a fresh geometric timer with mean one tick. Users
// expiring within the same tick are processed in ascending id against the
// already-updated state.
RunResult run(const NetworkScene& scene, const NetworkState& init, const SamplerConfig& cfg);

// Exhaustive enumeration of the joint state space with the Gibbs law at a
// fixed temperature. Serves as the ground-truth oracle on small instances.
struct Enumeration {
    std::vector<std::vector<UserState>> per_user_states;
    std::vector<double> energies;       // global energy per joint index
    std::vector<double> probabilities;  // Gibbs law at the requested temperature
    std::vector<std::size_t> minimizers;
    double min_energy = 0.0;

    std::size_t size() const { return energies.size(); }
    std::size_t index_of(const NetworkState& state) const;
    NetworkState state_at(std::size_t index) const;
};

// Throws std::runtime_error with the state-space size if it exceeds the
// guard (default one million joint configurations).
Enumeration enumerate_optimum(const NetworkScene& scene, double temperature,
                              std::size_t max_states = 1000000);

}  // namespace gibbsnet
