#pragma once

#include <string>

#include "gibbsnet/scene.hpp"

namespace gibbsnet {

// JSON serialization of a scene (schema documented in the README). Scenes
// with a custom orthogonality function cannot be serialized. Loading
// validates every structural invariant.
std::string scene_to_json(const NetworkScene& scene);
NetworkScene scene_from_json(const std::string& text);

void save_scene(const NetworkScene& scene, const std::string& path);
NetworkScene load_scene(const std::string& path);

}  // namespace gibbsnet
