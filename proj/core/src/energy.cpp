#include "gibbsnet/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gibbsnet {

namespace {

void check_user(int user, const NetworkScene& scene) {
    if (user < 0 || user >= static_cast<int>(scene.user_count()))
        throw std::invalid_argument("unknown user id " + std::to_string(user));
}

double interference_at(int user, const NetworkState& state, const NetworkScene& scene,
                       InterferenceScope scope) {
    const UserState& su = state[user];
    double acc = 0.0;
    auto add = [&](int v) {
        const UserState& sv = state[v];
        acc += scene.alpha(su.bs, sv.bs, su.channel, sv.channel) * sv.power_w *
               scene.gain(sv.bs, user, sv.channel);
    };
    if (scope == InterferenceScope::full) {
        for (int v = 0; v < static_cast<int>(state.size()); ++v)
            if (v != user) add(v);
    } else {
        for (int v : scene.users[user].neighbors) add(v);
    }
    return acc;
}

}  // namespace

double sinr(int user, const NetworkState& state, const NetworkScene& scene,
            InterferenceScope scope) {
    check_user(user, scene);
    const UserState& su = state[user];
    const double own = su.power_w * scene.gain(su.bs, user, su.channel);
    const double denom =
        scene.users[user].noise_w[su.channel] + interference_at(user, state, scene, scope);
    return own / denom;
}

double rate(int user, const NetworkState& state, const NetworkScene& scene) {
    return scene.rate_scale * std::log2(1.0 + sinr(user, state, scene));
}

double potential_delay(const NetworkState& state, const NetworkScene& scene) {
    double total = 0.0;
    for (int u = 0; u < static_cast<int>(state.size()); ++u) {
        const double r = rate(u, state, scene);
        if (r <= 0.0) return std::numeric_limits<double>::infinity();
        total += 1.0 / r;
    }
    return total;
}

double global_energy(const NetworkState& state, const NetworkScene& scene) {
    double total = 0.0;
    for (int u = 0; u < static_cast<int>(state.size()); ++u) {
        const UserState& su = state[u];
        const double own = su.power_w * scene.gain(su.bs, u, su.channel);
        total += (scene.users[u].noise_w[su.channel] +
                  interference_at(u, state, scene, InterferenceScope::full)) /
                 own;
    }
    return total;
}

double potential(std::span<const int> clique, const NetworkState& state,
                 const NetworkScene& scene) {
    if (clique.empty()) return 0.0;
    for (int u : clique) check_user(u, scene);
    if (clique.size() == 1) {
        const int u = clique[0];
        const UserState& su = state[u];
        return scene.users[u].noise_w[su.channel] /
               (su.power_w * scene.gain(su.bs, u, su.channel));
    }
    if (clique.size() == 2) {
        const int u = clique[0];
        const int v = clique[1];
        if (u == v) throw std::invalid_argument("clique contains a duplicate user");
        const UserState& su = state[u];
        const UserState& sv = state[v];
        const double at_u = scene.alpha(su.bs, sv.bs, su.channel, sv.channel) * sv.power_w *
                            scene.gain(sv.bs, u, sv.channel) /
                            (su.power_w * scene.gain(su.bs, u, su.channel));
        const double at_v = scene.alpha(sv.bs, su.bs, sv.channel, su.channel) * su.power_w *
                            scene.gain(su.bs, v, su.channel) /
                            (sv.power_w * scene.gain(sv.bs, v, sv.channel));
        return at_u + at_v;
    }
    return 0.0;
}

LocalEnergy local_energy(int user, const NetworkState& state, const NetworkScene& scene) {
    check_user(user, scene);
    const UserState& su = state[user];
    const double own = su.power_w * scene.gain(su.bs, user, su.channel);

    LocalEnergy e;
    e.selfish = (scene.users[user].noise_w[su.channel] +
                 interference_at(user, state, scene, InterferenceScope::neighbors)) /
                own;
    for (int v : scene.users[user].neighbors) {
        const UserState& sv = state[v];
        e.altruistic += scene.alpha(sv.bs, su.bs, sv.channel, su.channel) * su.power_w *
                        scene.gain(su.bs, v, su.channel) /
                        (sv.power_w * scene.gain(sv.bs, v, sv.channel));
    }
    e.total = e.selfish + e.altruistic;
    return e;
}

}  // namespace gibbsnet
