#pragma once

#include "gibbsnet/scene.hpp"

namespace gibbsnet {

// Today's default operation: every user attaches to the candidate BS with the
// strongest received pilot (ties to the lowest id), each BS hands channels to
// its attached users round-robin in ascending user id, and transmit power is
// the BS maximum.
NetworkState default_configuration(const NetworkScene& scene);

}  // namespace gibbsnet
