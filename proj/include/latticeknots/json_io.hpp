#pragma once

// Conformation JSON interchange:
//   {"format": "lattice-conformation/1",
//    "components": [[[x,y,z], ...], ...]}
// Corners in cyclic order, integers only; serialization is canonical so a
// parse/serialize round trip is byte-identical.

#include <string>

#include <json.hpp>

#include "latticeknots/conformation.hpp"

namespace latknot {

inline constexpr const char* kConformationFormat = "lattice-conformation/1";

inline std::string to_json(const Conformation& c) {
    nlohmann::ordered_json j;
    j["format"] = kConformationFormat;
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& k : c.components) {
        nlohmann::ordered_json corners = nlohmann::ordered_json::array();
        for (const auto& p : k.corners)
            corners.push_back(nlohmann::ordered_json::array({p.x, p.y, p.z}));
        comps.push_back(corners);
    }
    j["components"] = comps;
    return j.dump();
}

inline Conformation conformation_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("format")) {
        std::string f = j["format"].get<std::string>();
        if (f != kConformationFormat)
            throw std::invalid_argument("unsupported conformation format: " + f);
    }
    if (!j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("conformation JSON: missing components array");
    Conformation c;
    for (const auto& comp : j["components"]) {
        Component k;
        for (const auto& corner : comp) {
            if (!corner.is_array() || corner.size() != 3)
                throw std::invalid_argument("conformation JSON: corner must be [x,y,z]");
            for (const auto& v : corner)
                if (!v.is_number_integer())
                    throw std::invalid_argument("conformation JSON: coordinates must be integers");
            k.corners.push_back(LatticePoint{corner[0].get<Coord>(), corner[1].get<Coord>(),
                                             corner[2].get<Coord>()});
        }
        c.components.push_back(std::move(k));
    }
    return c;
}

}  // namespace latknot
