#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gibbsnet/energy.hpp"
#include "test_scenes.hpp"

using namespace gibbsnet;
using testutil::make_scene;
using testutil::random_scene;
using testutil::random_state;

namespace {

constexpr double kNoise = 4.0039e-15;

// Independent route to the global energy: evaluate the expanded sum term by
// term, without going through sinr().
double naive_global_energy(const NetworkState& st, const NetworkScene& s) {
    double total = 0.0;
    for (std::size_t u = 0; u < st.size(); ++u) {
        double numer = s.users[u].noise_w[st[u].channel];
        for (std::size_t v = 0; v < st.size(); ++v) {
            if (v == u) continue;
            numer += s.alpha(st[u].bs, st[v].bs, st[u].channel, st[v].channel) * st[v].power_w *
                     s.gain(st[v].bs, static_cast<int>(u), st[v].channel);
        }
        total += numer / (st[u].power_w * s.gain(st[u].bs, static_cast<int>(u), st[u].channel));
    }
    return total;
}

}  // namespace

TEST_CASE("sinr without interferers is P*l/N") {
    NetworkScene s = make_scene(1, 1, 1, 1.0, 1.0, kNoise, 1e-8);
    NetworkState st = {{0, 0, 1.0}};
    const double expect = 1e-8 / kNoise;  // ~2.4976e6
    CHECK(sinr(0, st, s) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect == doctest::Approx(2.4976e6).epsilon(1e-3));
}

TEST_CASE("sinr with one symmetric co-channel interferer") {
    NetworkScene s = make_scene(2, 2, 1, 1.0, 1.0, kNoise, 1e-9);
    s.gain_ref(0, 0, 0) = 1e-8;  // own links
    s.gain_ref(1, 1, 0) = 1e-8;
    NetworkState st = {{0, 0, 1.0}, {1, 0, 1.0}};
    const double expect = 1e-8 / (kNoise + 1e-9);
    CHECK(sinr(0, st, s) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(sinr(0, st, s) == doctest::Approx(10.0).epsilon(1e-4));  // noise negligible
    CHECK(sinr(1, st, s) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("orthogonal channels remove the cross term") {
    NetworkScene s = make_scene(2, 2, 2, 1.0, 1.0, kNoise, 1e-9);
    s.gain_ref(0, 0, 0) = 1e-8;
    s.gain_ref(0, 0, 1) = 1e-8;
    NetworkState separated = {{0, 0, 1.0}, {1, 1, 1.0}};
    CHECK(sinr(0, separated, s) == doctest::Approx(1e-8 / kNoise).epsilon(1e-12));
}

TEST_CASE("sinr faults on unknown user ids") {
    NetworkScene s = make_scene(1, 1, 1, 1.0, 1.0, kNoise, 1e-8);
    NetworkState st = {{0, 0, 1.0}};
    CHECK_THROWS_AS(sinr(1, st, s), std::invalid_argument);
    CHECK_THROWS_AS(sinr(-1, st, s), std::invalid_argument);
}

TEST_CASE("rate follows log2(1 + sinr)") {
    NetworkScene s = make_scene(1, 1, 1, 1.0, 1.0, kNoise, 1e-8);
    NetworkState st = {{0, 0, 1.0}};

    SUBCASE("sinr 1 gives 1 b/s/Hz") {
        s.gain_ref(0, 0, 0) = kNoise;  // own power 1 W: sinr exactly 1
        CHECK(rate(0, st, s) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("sinr 3 gives 2 b/s/Hz") {
        s.gain_ref(0, 0, 0) = 3.0 * kNoise;
        CHECK(rate(0, st, s) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("large sinr") {
        const double expect = std::log2(1.0 + 1e-8 / kNoise);
        CHECK(rate(0, st, s) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(expect == doctest::Approx(21.25).epsilon(1e-3));
    }
    SUBCASE("rate_scale multiplies") {
        s.rate_scale = 2.5;
        s.gain_ref(0, 0, 0) = kNoise;
        CHECK(rate(0, st, s) == doctest::Approx(2.5).epsilon(1e-12));
    }
}

TEST_CASE("potential_delay sums inverse rates") {
    NetworkScene s = make_scene(2, 2, 2, 1.0, 1.0, 1e-9, 1e-9);
    s.alpha.cross_channel = 0.0;
    s.gain_ref(0, 0, 0) = 1e-9;        // user 0: sinr 1, rate 1
    s.gain_ref(1, 1, 1) = 3e-9;        // user 1: sinr 3, rate 2
    NetworkState st = {{0, 0, 1.0}, {1, 1, 1.0}};
    CHECK(potential_delay(st, s) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("potential_delay returns the infinity sentinel at zero rate") {
    NetworkScene s = make_scene(1, 1, 1, 1.0, 1.0, kNoise, 1e-8);
    s.gain_ref(0, 0, 0) = 0.0;  // forced degenerate link
    NetworkState st = {{0, 0, 1.0}};
    CHECK(std::isinf(potential_delay(st, s)));
}

TEST_CASE("potential_delay matches per-user recomputation on random instances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        NetworkScene s = random_scene(rng, 3, 4, 2, 2);
        NetworkState st = random_state(rng, s);
        double expect = 0.0;
        for (int u = 0; u < 4; ++u) expect += 1.0 / rate(u, st, s);
        CHECK(potential_delay(st, s) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("global energy of a single user is 1/sinr") {
    NetworkScene s = make_scene(1, 1, 1, 1.0, 1.0, kNoise, 1e-8);
    NetworkState st = {{0, 0, 1.0}};
    CHECK(global_energy(st, s) == doctest::Approx(kNoise / 1e-8).epsilon(1e-12));
    CHECK(global_energy(st, s) == doctest::Approx(4.0039e-7).epsilon(1e-6));
}

TEST_CASE("global energy equals the expanded sum and the clique decomposition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n_users = 1 + static_cast<int>(rng() % 4);
        NetworkScene s = random_scene(rng, 3, n_users, 2, 2);
        NetworkState st = random_state(rng, s);

        const double e = global_energy(st, s);
        CHECK(e == doctest::Approx(naive_global_energy(st, s)).epsilon(1e-12));

        double cliques = 0.0;
        for (int u = 0; u < n_users; ++u) {
            const int single[] = {u};
            cliques += potential(single, st, s);
            for (int v = u + 1; v < n_users; ++v) {
                const int pair[] = {u, v};
                cliques += potential(pair, st, s);
            }
        }
        CHECK(e == doctest::Approx(cliques).epsilon(1e-12));
    }
}

TEST_CASE("doubling every power strictly decreases the energy when noise matters") {
    NetworkScene s = make_scene(2, 2, 1, 0.5, 1.0, 1e-9, 1e-9);
    s.gain_ref(0, 0, 0) = 1e-8;
    s.gain_ref(1, 1, 0) = 1e-8;
    NetworkState half = {{0, 0, 0.5}, {1, 0, 0.5}};
    NetworkState full = {{0, 0, 1.0}, {1, 0, 1.0}};
    CHECK(global_energy(full, s) < global_energy(half, s));
}

TEST_CASE("potential handles all clique sizes") {
    NetworkScene s = make_scene(2, 3, 1, 1.0, 1.0, 4e-15, 1e-8);
    NetworkState st = {{0, 0, 1.0}, {1, 0, 1.0}, {0, 0, 1.0}};

    CHECK(potential({}, st, s) == 0.0);

    const int triple[] = {0, 1, 2};
    CHECK(potential(triple, st, s) == 0.0);

    const int single[] = {0};
    CHECK(potential(single, st, s) == doctest::Approx(4e-15 / 1e-8).epsilon(1e-12));

    const int pair_uv[] = {0, 1};
    const int pair_vu[] = {1, 0};
    CHECK(potential(pair_uv, st, s) == potential(pair_vu, st, s));

    const int dup[] = {1, 1};
    CHECK_THROWS_AS(potential(dup, st, s), std::invalid_argument);
    const int bad[] = {7};
    CHECK_THROWS_AS(potential(bad, st, s), std::invalid_argument);
}

TEST_CASE("pair potential swap invariance on random instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        NetworkScene s = random_scene(rng, 3, 4, 2, 2);
        NetworkState st = random_state(rng, s);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                const int ab[] = {u, v};
                const int ba[] = {v, u};
                CHECK(potential(ab, st, s) == potential(ba, st, s));
            }
    }
}

TEST_CASE("local energy of an isolated user has no altruistic part") {
    NetworkScene s = make_scene(1, 1, 1, 1.0, 1.0, kNoise, 1e-8);
    NetworkState st = {{0, 0, 1.0}};
    const LocalEnergy e = local_energy(0, st, s);
    CHECK(e.altruistic == 0.0);
    CHECK(e.selfish == doctest::Approx(kNoise / 1e-8).epsilon(1e-12));
    CHECK(e.total == e.selfish);
}

TEST_CASE("sum of local energies is twice the energy minus the singletons") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        NetworkScene s = random_scene(rng, 3, 3, 2, 2);
        NetworkState st = random_state(rng, s);
        double locals = 0.0;
        double singles = 0.0;
        for (int u = 0; u < 3; ++u) {
            locals += local_energy(u, st, s).total;
            const int single[] = {u};
            singles += potential(single, st, s);
        }
        CHECK(locals ==
              doctest::Approx(2.0 * global_energy(st, s) - singles).epsilon(1e-11));
    }
}

TEST_CASE("single-site changes move the global energy by the local delta") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        NetworkScene s = random_scene(rng, 3, 4, 2, 2);
        NetworkState st = random_state(rng, s);
        const int u = static_cast<int>(rng() % 4);
        NetworkState st2 = st;
        st2[u] = random_state(rng, s)[u];

        const double de = global_energy(st2, s) - global_energy(st, s);
        const double dl = local_energy(u, st2, s).total - local_energy(u, st, s).total;
        CHECK(std::abs(de - dl) <= 1e-9 * std::max(std::abs(de), 1e-12));
    }
}

TEST_CASE("thresholded neighbor graphs bound the delta discrepancy") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        NetworkScene s = random_scene(rng, 3, 5, 2, 2);
        // Drop two users from u's neighbor list to mimic a theta cut.
        const int u = static_cast<int>(rng() % 5);
        std::vector<int> removed;
        auto& nbrs = s.users[u].neighbors;
        while (removed.size() < 2 && !nbrs.empty()) {
            const std::size_t k = rng() % nbrs.size();
            const int v = nbrs[k];
            nbrs.erase(nbrs.begin() + static_cast<long>(k));
            auto& back = s.users[v].neighbors;
            back.erase(std::find(back.begin(), back.end(), u));
            removed.push_back(v);
        }

        NetworkState st = random_state(rng, s);
        NetworkState st2 = st;
        st2[u] = random_state(rng, s)[u];

        const double de = global_energy(st2, s) - global_energy(st, s);
        const double dl = local_energy(u, st2, s).total - local_energy(u, st, s).total;
        double bound = 0.0;
        for (int v : removed) {
            const int pair[] = {u, v};
            bound += potential(pair, st, s) + potential(pair, st2, s);
        }
        CHECK(std::abs(de - dl) <= bound + 1e-12);
    }
}

TEST_CASE("reducing a pure cross gain never increases the energy") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        NetworkScene s = random_scene(rng, 3, 4, 2, 2);
        NetworkState st = random_state(rng, s);
        const int u = static_cast<int>(rng() % 4);
        const int v = (u + 1 + static_cast<int>(rng() % 3)) % 4;
        // The (bs, channel) pair must not be the one serving u, otherwise the
        // entry is u's own gain rather than a cross gain.
        if (st[v].bs == st[u].bs && st[v].channel == st[u].channel) continue;

        const double before = global_energy(st, s);
        s.gain_ref(st[v].bs, u, st[v].channel) *= 0.25;
        const double after = global_energy(st, s);
        CHECK(after <= before + 1e-15 * before);
    }
}

TEST_CASE("orthogonal channels decouple the energy exactly") {
    NetworkScene s = make_scene(3, 3, 3, 1.0, 1.0, 1e-9, 1e-8);
    s.alpha.cross_channel = 0.0;
    NetworkState st = {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}};
    double expect = 0.0;
    for (int u = 0; u < 3; ++u)
        expect += s.users[u].noise_w[st[u].channel] /
                  (st[u].power_w * s.gain(st[u].bs, u, st[u].channel));
    CHECK(global_energy(st, s) == expect);
}

TEST_CASE("parametric orthogonality is symmetric") {
    Orthogonality a;
    a.co_channel = 0.8;
    a.cross_channel = 0.1;
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const int b = static_cast<int>(rng() % 5);
        const int bp = static_cast<int>(rng() % 5);
        const int c = static_cast<int>(rng() % 3);
        const int cp = static_cast<int>(rng() % 3);
        CHECK(a(b, bp, c, cp) == a(bp, b, cp, c));
    }
}
