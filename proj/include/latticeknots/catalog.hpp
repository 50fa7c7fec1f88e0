#pragma once

// Named minimal (or best-known) conformations with their index records and
// reference Jones polynomials. The data ships as versioned JSON files under
// data/, embedded at configure time; each entry's coordinates were produced
// by the generators or by bounded search and certified against independent
// reference diagrams (torus formula, braid closures, pretzel and grid
// diagrams).

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "latticeknots/conformation.hpp"
#include "latticeknots/embedded_data.hpp"
#include "latticeknots/invariants.hpp"

namespace latknot {

struct CatalogEntry {
    std::string name;
    Conformation conformation;
    KnotRecord record;
};

namespace detail {

inline KnotRecord record_from_json(const nlohmann::json& j) {
    KnotRecord r;
    r.name = j.at("name").get<std::string>();
    r.components = j.value("components", 1);
    r.bridge = j.value("bridge", 0);
    r.crossing = j.value("crossing", -1);
    r.arc = j.value("arc", 0);
    r.s_cl = j.value("s_cl", 0);
    r.source = j.value("source", "");
    if (j.contains("jones_q")) {
        for (const auto& term : j.at("jones_q"))
            r.jones_q.add_term(term.at(0).get<int>(), term.at(1).get<long long>());
        r.has_jones = true;
    }
    return r;
}

struct CatalogData {
    std::map<std::string, CatalogEntry> entries;
    std::map<std::string, KnotRecord> records;
    std::vector<std::string> names;

    CatalogData() {
        nlohmann::json cat = nlohmann::json::parse(embedded::kCatalogJson);
        for (const auto& e : cat.at("entries")) {
            CatalogEntry entry;
            entry.name = e.at("name").get<std::string>();
            Component none;
            Conformation c;
            for (const auto& comp : e.at("components")) {
                Component k;
                for (const auto& p : comp)
                    k.corners.push_back(LatticePoint{p.at(0).get<Coord>(), p.at(1).get<Coord>(),
                                                     p.at(2).get<Coord>()});
                c.components.push_back(std::move(k));
            }
            entry.conformation = std::move(c);
            entry.record = record_from_json(e);
            names.push_back(entry.name);
            entries.emplace(entry.name, std::move(entry));
        }
        nlohmann::json rec = nlohmann::json::parse(embedded::kRecordsJson);
        for (const auto& r : rec.at("records")) {
            KnotRecord kr = record_from_json(r);
            records.emplace(kr.name, std::move(kr));
        }
    }
};

inline const CatalogData& catalog_data() {
    static CatalogData data;
    return data;
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() { return detail::catalog_data().names; }

inline CatalogEntry catalog(const std::string& name) {
    const auto& data = detail::catalog_data();
    auto it = data.entries.find(name);
    if (it == data.entries.end()) {
        std::string msg = "catalog: unknown name '" + name + "'; known:";
        for (const auto& n : data.names) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return it->second;
}

// Index record lookup (includes names without stored coordinates).
inline KnotRecord knot_record(const std::string& name) {
    const auto& data = detail::catalog_data();
    auto it = data.records.find(name);
    if (it != data.records.end()) return it->second;
    auto ce = data.entries.find(name);
    if (ce != data.entries.end()) return ce->second.record;
    throw std::invalid_argument("knot_record: unknown name '" + name + "'");
}

}  // namespace latknot
