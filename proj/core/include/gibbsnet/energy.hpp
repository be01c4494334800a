#pragma once

#include <span>

#include "gibbsnet/scene.hpp"

namespace gibbsnet {

// Which interferers enter the SINR denominator. Exact metrics use the full
// user set; the distributed sampler only sees a user's neighbors.
enum class InterferenceScope { full, neighbors };

// Downlink SINR of one user under the given state.
double sinr(int user, const NetworkState& state, const NetworkScene& scene,
            InterferenceScope scope = InterferenceScope::full);

// Achievable rate in b/s/Hz: rate_scale * log2(1 + sinr), full-sum SINR.
double rate(int user, const NetworkState& state, const NetworkScene& scene);

// Aggregate potential delay, sum of inverse rates. A zero-rate user yields
// +infinity; the sentinel keeps states comparable instead of faulting.
double potential_delay(const NetworkState& state, const NetworkScene& scene);

// Global energy: sum over users of 1/SINR with the full interference sum.
// Equals the clique-potential sum over all singletons and pairs.
double global_energy(const NetworkState& state, const NetworkScene& scene);

// Clique potential. Singletons carry the noise-over-signal term, pairs the
// symmetric cross-interference terms, anything larger is zero.
double potential(std::span<const int> clique, const NetworkState& state,
                 const NetworkScene& scene);

struct LocalEnergy {
    double selfish = 0.0;     // A: 1/SINR restricted to neighbors
    double altruistic = 0.0;  // B: interference this user inflicts on neighbors
    double total = 0.0;
};

// Local energy of one user, evaluated over its neighbor set only.
LocalEnergy local_energy(int user, const NetworkState& state, const NetworkScene& scene);

}  // namespace gibbsnet
