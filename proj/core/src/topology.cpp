#include "gibbsnet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "gibbsnet/random.hpp"

namespace gibbsnet {

double path_loss_db(double distance_m, double shadow_db) {
    const double d = std::max(distance_m, 1.0);
    return -30.18 - 26.0 * std::log10(d) - shadow_db;
}

double path_loss_gain(double distance_m, double shadow_db) {
    return std::pow(10.0, path_loss_db(distance_m, shadow_db) / 10.0);
}

namespace {

// Mask of stations whose pilot clears theta at each user ("heard" sets).
std::vector<std::vector<char>> heard_masks(const NetworkScene& scene, double theta_w) {
    const int n_bs = static_cast<int>(scene.station_count());
    std::vector<std::vector<char>> heard(scene.user_count(), std::vector<char>(n_bs, 0));
    for (std::size_t u = 0; u < scene.user_count(); ++u)
        for (int b = 0; b < n_bs; ++b)
            heard[u][b] = scene.received_pilot(b, static_cast<int>(u)) > theta_w ? 1 : 0;
    return heard;
}

int strongest_station(const NetworkScene& scene, int user) {
    int best = 0;
    double best_p = -1.0;
    for (int b = 0; b < static_cast<int>(scene.station_count()); ++b) {
        const double p = scene.received_pilot(b, user);
        if (p > best_p) {
            best_p = p;
            best = b;
        }
    }
    return best;
}

}  // namespace

NeighborGraph build_neighbors(const NetworkScene& scene, double theta_w) {
    const std::size_t n_users = scene.user_count();
    const int n_bs = static_cast<int>(scene.station_count());
    if (n_bs == 0 && n_users > 0)
        throw std::invalid_argument("cannot build graphs without stations");

    NeighborGraph g;
    g.candidates.resize(n_users);
    g.neighbors.resize(n_users);
    if (n_users == 0) return g;

    const auto heard = heard_masks(scene, theta_w);
    for (std::size_t u = 0; u < n_users; ++u) {
        for (int b = 0; b < n_bs; ++b)
            if (heard[u][b]) g.candidates[u].push_back(b);
        if (g.candidates[u].empty())
            g.candidates[u].push_back(strongest_station(scene, static_cast<int>(u)));
    }

    for (std::size_t u = 0; u < n_users; ++u) {
        for (std::size_t v = u + 1; v < n_users; ++v) {
            bool linked = false;
            for (int b : g.candidates[v])
                if (heard[u][b]) {
                    linked = true;
                    break;
                }
            if (!linked)
                for (int b : g.candidates[u])
                    if (heard[v][b]) {
                        linked = true;
                        break;
                    }
            if (linked) {
                g.neighbors[u].push_back(static_cast<int>(v));
                g.neighbors[v].push_back(static_cast<int>(u));
            }
        }
    }
    return g;
}

std::vector<std::pair<int, int>> implicit_neighbors(const NetworkScene& scene, double theta_w) {
    const NeighborGraph g = build_neighbors(scene, theta_w);
    std::set<std::pair<int, int>> pairs;

    // alpha-weighted pilot condition between candidate b of u and b' of v.
    auto condition = [&](int b, int bp, int u, int v) {
        for (int c = 0; c < scene.n_channels; ++c)
            for (int cp = 0; cp < scene.n_channels; ++cp) {
                const double a = scene.alpha(b, bp, c, cp);
                if (a <= 0.0) continue;
                if (a * scene.stations[bp].pilot_power_w * scene.gain(bp, u, cp) > theta_w)
                    return true;
                if (a * scene.stations[b].pilot_power_w * scene.gain(b, v, c) > theta_w)
                    return true;
            }
        return false;
    };

    for (std::size_t u = 0; u < scene.user_count(); ++u) {
        for (int v : g.neighbors[u]) {
            if (v < static_cast<int>(u)) continue;
            for (int b : g.candidates[u])
                for (int bp : g.candidates[v]) {
                    if (b == bp) continue;
                    auto key = std::minmax(b, bp);
                    if (pairs.count({key.first, key.second})) continue;
                    if (condition(b, bp, static_cast<int>(u), v))
                        pairs.insert({key.first, key.second});
                }
        }
    }
    return {pairs.begin(), pairs.end()};
}

NetworkScene generate_scene(const TopologyConfig& cfg, std::mt19937_64& rng) {
    if (cfg.n_users < 0 || cfg.n_small < 0) throw std::invalid_argument("counts must be nonnegative");
    if (cfg.n_channels < 1) throw std::invalid_argument("at least one channel is required");
    if (cfg.shadowing_sigma_db < 0.0) throw std::invalid_argument("shadowing sigma must be nonnegative");

    NetworkScene scene;
    scene.window_w = cfg.window_w;
    scene.window_h = cfg.window_h;
    scene.n_channels = cfg.n_channels;
    scene.grid.step_w = cfg.power_step_w;
    scene.alpha = cfg.alpha;
    scene.rate_scale = cfg.rate_scale;
    scene.theta_w = cfg.theta_w;

    int id = 0;
    for (const Vec2& p : cfg.macro_positions) {
        scene.stations.push_back(
            {id++, p, BsKind::macro, cfg.macro_power_w, cfg.macro_power_w});
    }

    std::uniform_real_distribution<double> ux(0.0, cfg.window_w);
    std::uniform_real_distribution<double> uy(0.0, cfg.window_h);
    for (int i = 0; i < cfg.n_small; ++i) {
        const Vec2 p{ux(rng), uy(rng)};
        scene.stations.push_back(
            {id++, p, BsKind::small, cfg.small_power_w, cfg.small_power_w});
    }

    for (int i = 0; i < cfg.n_users; ++i) {
        UserTerminal t;
        t.id = i;
        t.position = {ux(rng), uy(rng)};
        t.noise_w.assign(cfg.n_channels, cfg.noise_w);
        scene.users.push_back(std::move(t));
    }

    // Shadowing is frozen per (station, user) pair and flat across channels.
    scene.attenuation.resize(scene.station_count() * scene.user_count() *
                             static_cast<std::size_t>(cfg.n_channels));
    std::normal_distribution<double> shadow(0.0, 1.0);
    for (std::size_t b = 0; b < scene.station_count(); ++b)
        for (std::size_t u = 0; u < scene.user_count(); ++u) {
            const double x = shadow(rng) * cfg.shadowing_sigma_db;
            const double d = distance(scene.stations[b].position, scene.users[u].position);
            const double g = std::min(path_loss_gain(d, x), 1.0);
            for (int c = 0; c < cfg.n_channels; ++c)
                scene.gain_ref(static_cast<int>(b), static_cast<int>(u), c) = g;
        }

    NeighborGraph g = build_neighbors(scene, cfg.theta_w);
    for (std::size_t u = 0; u < scene.user_count(); ++u) {
        scene.users[u].candidate_bs = std::move(g.candidates[u]);
        scene.users[u].neighbors = std::move(g.neighbors[u]);
    }

    scene.validate();
    return scene;
}

NetworkScene generate_scene(const TopologyConfig& cfg) {
    std::mt19937_64 rng = make_rng(cfg.seed);
    return generate_scene(cfg, rng);
}

}  // namespace gibbsnet
