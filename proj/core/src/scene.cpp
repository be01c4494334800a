#include "gibbsnet/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbsnet {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

int PowerGrid::levels(double max_power_w) const {
    if (step_w <= 0.0 || max_power_w <= 0.0) return 0;
    const double n = max_power_w / step_w;
    const int count = static_cast<int>(std::llround(n));
    return count >= 1 ? count : 0;
}

double PowerGrid::level(double max_power_w, int index) const {
    const int n = levels(max_power_w);
    if (index < 0 || index >= n) fail("power level index out of range");
    // Top level is pinned to max_power_w so the maximum is exact.
    if (index == n - 1) return max_power_w;
    return step_w * static_cast<double>(index + 1);
}

int PowerGrid::index_of(double max_power_w, double power_w) const {
    const int n = levels(max_power_w);
    if (n == 0 || power_w <= 0.0) return -1;
    const int idx = static_cast<int>(std::llround(power_w / step_w)) - 1;
    if (idx < 0 || idx >= n) return -1;
    return level(max_power_w, idx) == power_w ? idx : -1;
}

double NetworkScene::received_pilot(int bs, int user) const {
    double best = 0.0;
    for (int c = 0; c < n_channels; ++c) best = std::max(best, gain(bs, user, c));
    return stations[bs].pilot_power_w * best;
}

void NetworkScene::validate() const {
    if (window_w <= 0.0 || window_h <= 0.0) fail("window dimensions must be positive");
    if (n_channels < 1) fail("at least one channel is required");
    if (grid.step_w <= 0.0) fail("power step must be positive");
    if (rate_scale <= 0.0) fail("rate scale must be positive");
    if (theta_w < 0.0) fail("pilot threshold must be nonnegative");
    if (alpha.co_channel < 0.0 || alpha.co_channel > 1.0 || alpha.cross_channel < 0.0 ||
        alpha.cross_channel > 1.0)
        fail("orthogonality factors must lie in [0, 1]");

    double min_macro = -1.0, max_small = 0.0;
    for (std::size_t b = 0; b < stations.size(); ++b) {
        const BaseStation& s = stations[b];
        if (s.id != static_cast<int>(b)) fail("station ids must be dense and ascending");
        if (s.max_power_w <= 0.0) fail("station max power must be positive");
        if (s.pilot_power_w <= 0.0) fail("station pilot power must be positive");
        if (s.position.x < 0.0 || s.position.x > window_w || s.position.y < 0.0 ||
            s.position.y > window_h)
            fail("station lies outside the simulation window");
        const int n = grid.levels(s.max_power_w);
        if (n < 1) fail("station max power below one power step");
        if (std::abs(n * grid.step_w - s.max_power_w) > 1e-9 * s.max_power_w)
            fail("station max power is not a multiple of the power step");
        if (s.kind == BsKind::macro)
            min_macro = min_macro < 0.0 ? s.max_power_w : std::min(min_macro, s.max_power_w);
        else
            max_small = std::max(max_small, s.max_power_w);
    }
    if (min_macro >= 0.0 && max_small > min_macro)
        fail("macro max power must dominate small-cell max power");

    if (attenuation.size() != stations.size() * users.size() * static_cast<std::size_t>(n_channels))
        fail("attenuation table size mismatch");
    for (double g : attenuation)
        if (!(g > 0.0) || g > 1.0) fail("attenuation must lie in (0, 1]");

    for (std::size_t u = 0; u < users.size(); ++u) {
        const UserTerminal& t = users[u];
        if (t.id != static_cast<int>(u)) fail("user ids must be dense and ascending");
        if (t.position.x < 0.0 || t.position.x > window_w || t.position.y < 0.0 ||
            t.position.y > window_h)
            fail("user lies outside the simulation window");
        if (t.candidate_bs.empty()) fail("every user needs at least one candidate BS");
        if (!std::is_sorted(t.candidate_bs.begin(), t.candidate_bs.end()))
            fail("candidate BS list must be sorted");
        for (int b : t.candidate_bs)
            if (b < 0 || b >= static_cast<int>(stations.size())) fail("candidate BS id out of range");
        if (!std::is_sorted(t.neighbors.begin(), t.neighbors.end()))
            fail("neighbor list must be sorted");
        if (t.noise_w.size() != static_cast<std::size_t>(n_channels))
            fail("noise table must cover every channel");
        for (double n : t.noise_w)
            if (!(n > 0.0)) fail("noise must be strictly positive");
        for (int v : t.neighbors) {
            if (v < 0 || v >= static_cast<int>(users.size())) fail("neighbor id out of range");
            if (v == static_cast<int>(u)) fail("a user cannot neighbor itself");
            const auto& back = users[v].neighbors;
            if (!std::binary_search(back.begin(), back.end(), static_cast<int>(u)))
                fail("neighbor relation must be symmetric");
        }
    }
}

void validate_state(const NetworkState& state, const NetworkScene& scene) {
    if (state.size() != scene.user_count()) fail("state size does not match the user set");
    for (std::size_t u = 0; u < state.size(); ++u) {
        const UserState& s = state[u];
        const auto& cands = scene.users[u].candidate_bs;
        if (!std::binary_search(cands.begin(), cands.end(), s.bs))
            fail("state assigns user " + std::to_string(u) + " to a non-candidate BS");
        if (s.channel < 0 || s.channel >= scene.n_channels)
            fail("state assigns user " + std::to_string(u) + " an unknown channel");
        if (scene.grid.index_of(scene.stations[s.bs].max_power_w, s.power_w) < 0)
            fail("state assigns user " + std::to_string(u) + " an off-grid power");
    }
}

}  // namespace gibbsnet
