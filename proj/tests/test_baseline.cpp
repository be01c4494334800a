#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "gibbsnet/baseline.hpp"
#include "gibbsnet/topology.hpp"
#include "test_scenes.hpp"

using namespace gibbsnet;
using testutil::make_scene;

TEST_CASE("a stronger far macro beats a nearer small cell") {
    NetworkScene s = make_scene(2, 1, 1, 0.1, 1.0, 4e-15, 1e-9);
    s.stations[0].kind = BsKind::macro;
    s.stations[0].max_power_w = 40.0;
    s.stations[0].pilot_power_w = 40.0;
    s.stations[1].kind = BsKind::small;
    // Small cell has the better gain, but 40 * 1e-9 > 1 * 1e-8.
    s.gain_ref(0, 0, 0) = 1e-9;
    s.gain_ref(1, 0, 0) = 1e-8;

    const NetworkState st = default_configuration(s);
    CHECK(st[0].bs == 0);
    CHECK(st[0].power_w == 40.0);
}

TEST_CASE("channels are handed out round-robin per station") {
    NetworkScene s = make_scene(1, 5, 2, 0.1, 1.0, 4e-15, 1e-8);
    const NetworkState st = default_configuration(s);
    std::map<int, int> load;
    for (const auto& u : st) {
        CHECK(u.bs == 0);
        ++load[u.channel];
    }
    CHECK(load[0] == 3);
    CHECK(load[1] == 2);
    // Ascending user ids alternate channels.
    CHECK(st[0].channel == 0);
    CHECK(st[1].channel == 1);
    CHECK(st[2].channel == 0);
}

TEST_CASE("every user transmits at its station's maximum power") {
    TopologyConfig cfg;
    cfg.n_users = 20;
    cfg.n_small = 10;
    cfg.n_channels = 3;
    cfg.seed = 21;
    const NetworkScene s = generate_scene(cfg);
    const NetworkState st = default_configuration(s);
    for (std::size_t u = 0; u < st.size(); ++u)
        CHECK(st[u].power_w == s.stations[st[u].bs].max_power_w);
    CHECK_NOTHROW(validate_state(st, s));
}

TEST_CASE("no candidate offers a strictly higher pilot than the assigned station") {
    TopologyConfig cfg;
    cfg.n_users = 25;
    cfg.n_small = 12;
    cfg.n_channels = 2;
    cfg.seed = 22;
    const NetworkScene s = generate_scene(cfg);
    const NetworkState st = default_configuration(s);
    for (std::size_t u = 0; u < st.size(); ++u) {
        const double assigned = s.received_pilot(st[u].bs, static_cast<int>(u));
        for (int b : s.users[u].candidate_bs)
            CHECK(s.received_pilot(b, static_cast<int>(u)) <= assigned);
    }
}

TEST_CASE("per-station channel loads differ by at most one") {
    TopologyConfig cfg;
    cfg.n_users = 40;
    cfg.n_small = 6;
    cfg.n_channels = 3;
    cfg.seed = 23;
    const NetworkScene s = generate_scene(cfg);
    const NetworkState st = default_configuration(s);

    std::map<int, std::vector<int>> loads;
    for (const auto& u : st) {
        auto& per_channel = loads[u.bs];
        per_channel.resize(s.n_channels, 0);
        ++per_channel[u.channel];
    }
    for (const auto& [bs, per_channel] : loads) {
        const auto [lo, hi] = std::minmax_element(per_channel.begin(), per_channel.end());
        CHECK(*hi - *lo <= 1);
    }
}

TEST_CASE("received-power ties break toward the lowest station id") {
    NetworkScene s = make_scene(3, 1, 1, 0.1, 1.0, 4e-15, 1e-8);  // equal everything
    const NetworkState st = default_configuration(s);
    CHECK(st[0].bs == 0);
}
