#include "gibbsnet/scene_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gibbsnet {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "gibbsnet-scene";
constexpr int kVersion = 1;

}  // namespace

std::string scene_to_json(const NetworkScene& scene) {
    if (scene.alpha.custom)
        throw std::invalid_argument("a custom orthogonality function cannot be serialized");

    json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["window"] = {{"width", scene.window_w}, {"height", scene.window_h}};
    j["channels"] = scene.n_channels;
    j["rate_scale"] = scene.rate_scale;
    j["theta_w"] = scene.theta_w;
    j["power_step_w"] = scene.grid.step_w;
    j["orthogonality"] = {{"co_channel", scene.alpha.co_channel},
                          {"cross_channel", scene.alpha.cross_channel}};

    j["stations"] = json::array();
    for (const BaseStation& s : scene.stations) {
        j["stations"].push_back({{"id", s.id},
                                 {"x", s.position.x},
                                 {"y", s.position.y},
                                 {"kind", s.kind == BsKind::macro ? "macro" : "small"},
                                 {"max_power_w", s.max_power_w},
                                 {"pilot_power_w", s.pilot_power_w}});
    }

    j["users"] = json::array();
    for (const UserTerminal& u : scene.users) {
        j["users"].push_back({{"id", u.id},
                              {"x", u.position.x},
                              {"y", u.position.y},
                              {"candidate_bs", u.candidate_bs},
                              {"neighbors", u.neighbors},
                              {"noise_w", u.noise_w}});
    }

    j["attenuation"] = scene.attenuation;
    return j.dump(2);
}

NetworkScene scene_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scene parse error: ") + e.what());
    }
    if (j.value("format", "") != kFormat)
        throw std::runtime_error("not a scene document (missing format tag)");
    if (j.value("version", 0) != kVersion)
        throw std::runtime_error("unsupported scene document version");

    NetworkScene scene;
    try {
        scene.window_w = j.at("window").at("width").get<double>();
        scene.window_h = j.at("window").at("height").get<double>();
        scene.n_channels = j.at("channels").get<int>();
        scene.rate_scale = j.at("rate_scale").get<double>();
        scene.theta_w = j.at("theta_w").get<double>();
        scene.grid.step_w = j.at("power_step_w").get<double>();
        scene.alpha.co_channel = j.at("orthogonality").at("co_channel").get<double>();
        scene.alpha.cross_channel = j.at("orthogonality").at("cross_channel").get<double>();

        for (const json& s : j.at("stations")) {
            BaseStation bs;
            bs.id = s.at("id").get<int>();
            bs.position = {s.at("x").get<double>(), s.at("y").get<double>()};
            const std::string kind = s.at("kind").get<std::string>();
            if (kind != "macro" && kind != "small")
                throw std::runtime_error("unknown station kind: " + kind);
            bs.kind = kind == "macro" ? BsKind::macro : BsKind::small;
            bs.max_power_w = s.at("max_power_w").get<double>();
            bs.pilot_power_w = s.at("pilot_power_w").get<double>();
            scene.stations.push_back(bs);
        }
        for (const json& u : j.at("users")) {
            UserTerminal t;
            t.id = u.at("id").get<int>();
            t.position = {u.at("x").get<double>(), u.at("y").get<double>()};
            t.candidate_bs = u.at("candidate_bs").get<std::vector<int>>();
            t.neighbors = u.at("neighbors").get<std::vector<int>>();
            t.noise_w = u.at("noise_w").get<std::vector<double>>();
            scene.users.push_back(std::move(t));
        }
        scene.attenuation = j.at("attenuation").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed scene document: ") + e.what());
    }

    scene.validate();
    return scene;
}

void save_scene(const NetworkScene& scene, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << scene_to_json(scene) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

NetworkScene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scene_from_json(buf.str());
}

}  // namespace gibbsnet
