#include "gibbsnet/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "gibbsnet/energy.hpp"
#include "gibbsnet/random.hpp"

namespace gibbsnet {

namespace {

void check_user(int user, const NetworkScene& scene) {
    if (user < 0 || user >= static_cast<int>(scene.user_count()))
        throw std::invalid_argument("unknown user id " + std::to_string(user));
}

double annealed_temperature(int tick) {
    // 1/ln(1 + t) is undefined at t = 0; shift by one tick.
    return 1.0 / std::log(2.0 + static_cast<double>(tick));
}

// Scratch space for the in-place candidate evaluation. The candidate order
// matches candidate_states exactly.
struct Workspace {
    std::vector<double> energies;
    std::vector<double> rcv_from;  // per neighbor: power it lands on this user with
    std::vector<double> inv_own;   // per neighbor: 1 / received own-signal power
};

// Evaluates the local energy of every candidate state of `user` against the
// current state, writing into ws.energies. Returns the candidate count.
std::size_t evaluate_candidates(int user, const NetworkState& state, const NetworkScene& scene,
                                Workspace& ws) {
    const UserTerminal& ut = scene.users[user];
    const int n_ch = scene.n_channels;
    const auto& nbrs = ut.neighbors;
    const bool simple_alpha = !scene.alpha.custom;

    ws.rcv_from.resize(nbrs.size());
    ws.inv_own.resize(nbrs.size());
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const UserState& sv = state[nbrs[k]];
        ws.rcv_from[k] = sv.power_w * scene.gain(sv.bs, user, sv.channel);
        ws.inv_own[k] = 1.0 / (sv.power_w * scene.gain(sv.bs, nbrs[k], sv.channel));
    }

    std::size_t total = 0;
    for (int b : ut.candidate_bs) total += static_cast<std::size_t>(n_ch) * scene.power_levels(b);
    ws.energies.resize(total);

    std::size_t idx = 0;
    for (int b : ut.candidate_bs) {
        const int levels = scene.power_levels(b);
        for (int c = 0; c < n_ch; ++c) {
            // Interference seen on (b, c) and the per-watt leakage inflicted
            // on the neighbors; both are constant across power levels.
            double interference = 0.0;
            double leak = 0.0;
            if (simple_alpha) {
                const double co = scene.alpha.co_channel;
                const double cross = scene.alpha.cross_channel;
                for (std::size_t k = 0; k < nbrs.size(); ++k) {
                    const UserState& sv = state[nbrs[k]];
                    const double a = sv.channel == c ? co : cross;
                    interference += a * ws.rcv_from[k];
                    leak += a * scene.gain(b, nbrs[k], c) * ws.inv_own[k];
                }
            } else {
                for (std::size_t k = 0; k < nbrs.size(); ++k) {
                    const UserState& sv = state[nbrs[k]];
                    interference +=
                        scene.alpha(b, sv.bs, c, sv.channel) * ws.rcv_from[k];
                    leak += scene.alpha(sv.bs, b, sv.channel, c) *
                            scene.gain(b, nbrs[k], c) * ws.inv_own[k];
                }
            }
            const double selfish_numer =
                (ut.noise_w[c] + interference) / scene.gain(b, user, c);
            for (int l = 0; l < levels; ++l) {
                const double p = scene.power_level(b, l);
                ws.energies[idx++] = selfish_numer / p + p * leak;
            }
        }
    }
    return total;
}

UserState candidate_at(int user, const NetworkScene& scene, std::size_t index) {
    const UserTerminal& ut = scene.users[user];
    for (int b : ut.candidate_bs) {
        const std::size_t block =
            static_cast<std::size_t>(scene.n_channels) * scene.power_levels(b);
        if (index < block) {
            const int levels = scene.power_levels(b);
            const int c = static_cast<int>(index) / levels;
            const int l = static_cast<int>(index) % levels;
            return {b, c, scene.power_level(b, l)};
        }
        index -= block;
    }
    throw std::out_of_range("candidate index out of range");
}

MessageCounts count_messages(int user, const NetworkScene& scene) {
    const UserTerminal& ut = scene.users[user];
    const std::uint64_t n_ch = static_cast<std::uint64_t>(scene.n_channels);
    const std::uint64_t n_cand = ut.candidate_bs.size();
    const std::uint64_t n_nbr = ut.neighbors.size();
    MessageCounts m;
    m.noise_items = n_ch;
    m.interference_items = n_ch * n_cand;
    m.pathloss_items = n_ch * n_cand;
    m.received_power_items = n_nbr;
    m.cross_gain_items = n_nbr * n_ch * n_cand;
    return m;
}

}  // namespace

std::vector<UserState> candidate_states(int user, const NetworkScene& scene) {
    check_user(user, scene);
    std::vector<UserState> out;
    for (int b : scene.users[user].candidate_bs) {
        const int levels = scene.power_levels(b);
        for (int c = 0; c < scene.n_channels; ++c)
            for (int l = 0; l < levels; ++l)
                out.push_back({b, c, scene.power_level(b, l)});
    }
    return out;
}

std::vector<double> boltzmann_weights(std::span<const double> energies, double temperature) {
    if (temperature <= 0.0) throw std::invalid_argument("temperature must be positive");
    if (energies.empty()) return {};
    double min_e = std::numeric_limits<double>::infinity();
    for (double e : energies) min_e = std::min(min_e, e);

    std::vector<double> w(energies.size());
    double total = 0.0;
    if (std::isinf(min_e)) {
        total = 0.0;  // every candidate is infinitely bad
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = std::exp(-(energies[i] - min_e) / temperature);
            total += w[i];
        }
    }
    if (total <= 0.0) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
        return w;
    }
    for (double& x : w) x /= total;
    return w;
}

std::size_t greedy_pick(std::span<const double> energies) {
    if (energies.empty()) throw std::invalid_argument("empty candidate set");
    std::size_t best = 0;
    for (std::size_t i = 1; i < energies.size(); ++i)
        if (energies[i] < energies[best]) best = i;
    return best;
}

std::vector<double> transition_distribution(int user, const NetworkState& state,
                                            const NetworkScene& scene, double temperature) {
    check_user(user, scene);
    const std::vector<UserState> cands = candidate_states(user, scene);
    std::vector<double> energies(cands.size());
    NetworkState probe = state;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        probe[user] = cands[i];
        energies[i] = local_energy(user, probe, scene).total;
    }
    return boltzmann_weights(energies, temperature);
}

RunResult run(const NetworkScene& scene, const NetworkState& init, const SamplerConfig& cfg) {
    if (cfg.max_ticks < 0) throw std::invalid_argument("max_ticks must be nonnegative");
    if (cfg.schedule == TemperatureSchedule::fixed && cfg.temperature <= 0.0)
        throw std::invalid_argument("temperature must be positive");
    validate_state(init, scene);

    const int n_users = static_cast<int>(scene.user_count());
    std::mt19937_64 rng = make_rng(cfg.seed);
    std::geometric_distribution<int> timer_draw(0.5);  // support {0,1,...}, mean 1
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    RunResult result;
    result.final_state = init;
    result.log.initial_state = init;
    NetworkState& state = result.final_state;

    std::vector<double> timers(n_users);
    for (int u = 0; u < n_users; ++u) timers[u] = timer_draw(rng);

    Workspace ws;
    auto trace_row = [&](int tick) {
        TraceRow row;
        row.tick = tick;
        row.global_energy = global_energy(state, scene);
        row.potential_delay = potential_delay(state, scene);
        for (int u = 0; u < n_users; ++u) row.sum_throughput += rate(u, state, scene);
        result.trace.push_back(row);
    };
    if (cfg.record_trace) trace_row(0);

    for (int tick = 0; tick < cfg.max_ticks; ++tick) {
        const double temperature = cfg.schedule == TemperatureSchedule::annealed
                                       ? annealed_temperature(tick)
                                       : cfg.temperature;
        for (int u = 0; u < n_users; ++u) {
            if (timers[u] > 0.0) {
                timers[u] -= cfg.tick_seconds;
                continue;
            }
            const std::size_t count = evaluate_candidates(u, state, scene, ws);
            std::size_t pick;
            if (cfg.mode == SamplerMode::greedy) {
                pick = greedy_pick(ws.energies);
            } else {
                // Inline Boltzmann draw over ws.energies.
                double min_e = std::numeric_limits<double>::infinity();
                for (double e : ws.energies) min_e = std::min(min_e, e);
                double total = 0.0;
                if (!std::isinf(min_e))
                    for (double& e : ws.energies) {
                        e = std::exp(-(e - min_e) / temperature);
                        total += e;
                    }
                if (total > 0.0) {
                    const double r = unit(rng) * total;
                    double acc = 0.0;
                    pick = count - 1;
                    for (std::size_t i = 0; i < count; ++i) {
                        acc += ws.energies[i];
                        if (acc >= r) {
                            pick = i;
                            break;
                        }
                    }
                } else {
                    pick = std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
                }
            }

            Transition tr;
            tr.tick = tick;
            tr.user = u;
            tr.old_state = state[u];
            tr.new_state = candidate_at(u, scene, pick);
            tr.evaluations = static_cast<int>(count);
            tr.messages = count_messages(u, scene);
            state[u] = tr.new_state;
            result.log.entries.push_back(tr);

            timers[u] = timer_draw(rng);
        }
        if (cfg.record_trace) trace_row(tick + 1);
    }
    return result;
}

std::size_t Enumeration::index_of(const NetworkState& state) const {
    if (state.size() != per_user_states.size())
        throw std::invalid_argument("state size does not match the enumeration");
    std::size_t index = 0;
    for (std::size_t u = 0; u < state.size(); ++u) {
        const auto& options = per_user_states[u];
        const auto it = std::find(options.begin(), options.end(), state[u]);
        if (it == options.end()) throw std::invalid_argument("state not in the enumeration");
        index = index * options.size() + static_cast<std::size_t>(it - options.begin());
    }
    return index;
}

NetworkState Enumeration::state_at(std::size_t index) const {
    NetworkState state(per_user_states.size());
    for (std::size_t u = per_user_states.size(); u-- > 0;) {
        const auto& options = per_user_states[u];
        state[u] = options[index % options.size()];
        index /= options.size();
    }
    return state;
}

Enumeration enumerate_optimum(const NetworkScene& scene, double temperature,
                              std::size_t max_states) {
    if (temperature <= 0.0) throw std::invalid_argument("temperature must be positive");

    Enumeration e;
    std::size_t total = 1;
    for (std::size_t u = 0; u < scene.user_count(); ++u) {
        e.per_user_states.push_back(candidate_states(static_cast<int>(u), scene));
        const std::size_t n = e.per_user_states.back().size();
        if (n == 0) throw std::runtime_error("a user has an empty candidate set");
        if (total > max_states / n + 1)
            throw std::runtime_error("joint state space too large to enumerate: more than " +
                                     std::to_string(max_states) + " configurations");
        total *= n;
    }
    if (total > max_states)
        throw std::runtime_error("joint state space too large to enumerate: " +
                                 std::to_string(total) + " configurations");

    e.energies.resize(total);
    NetworkState state(scene.user_count());
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        for (std::size_t u = scene.user_count(); u-- > 0;) {
            const auto& options = e.per_user_states[u];
            state[u] = options[rem % options.size()];
            rem /= options.size();
        }
        e.energies[i] = global_energy(state, scene);
    }

    e.min_energy = *std::min_element(e.energies.begin(), e.energies.end());
    const double tie_band = std::abs(e.min_energy) * 1e-12;
    for (std::size_t i = 0; i < total; ++i)
        if (e.energies[i] <= e.min_energy + tie_band) e.minimizers.push_back(i);

    e.probabilities = boltzmann_weights(e.energies, temperature);
    return e;
}

}  // namespace gibbsnet
