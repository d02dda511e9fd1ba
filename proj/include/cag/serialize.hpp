#pragma once

// JSON forms of representations, certificates, oracle models and check
// reports. Objects use sorted keys, so dumps are byte-stable.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cag/arc_rep.hpp"
#include "cag/graph.hpp"
#include "cag/obstructions.hpp"
#include "cag/oracle.hpp"

namespace cag {

using Json = nlohmann::json;

inline Json rep_to_json(const Graph& g, const ArcRep& rep) {
    Json arcs = Json::object();
    for (const auto& [v, lr] : rep.arcs) arcs[g.label(v)] = {lr.first, lr.second};
    Json full = Json::array();
    for (Vertex v : rep.full) full.push_back(g.label(v));
    return {{"k", rep.k}, {"arcs", arcs}, {"full", full}};
}

/// Reads {"k", "arcs", "full"}; labels are resolved against g.
inline ArcRep rep_from_json(const Graph& g, const Json& j) {
    auto bad = [](const std::string& why) { return Error(Errc::MalformedRep, why); };
    if (!j.is_object() || !j.contains("k") || !j.contains("arcs")) throw bad("expected an object with k and arcs");
    ArcRep rep;
    try {
        rep.k = j.at("k").get<int>();
        for (const auto& [label, lr] : j.at("arcs").items()) {
            auto v = g.find(label);
            if (!v) throw bad("unknown vertex " + label);
            if (!lr.is_array() || lr.size() != 2) throw bad("arc of " + label + " must be [l, r]");
            rep.arcs[*v] = {lr[0].get<int>(), lr[1].get<int>()};
        }
        if (j.contains("full"))
            for (const auto& label : j.at("full")) {
                auto v = g.find(label.get<std::string>());
                if (!v) throw bad("unknown vertex " + label.get<std::string>());
                rep.full.push_back(*v);
            }
    } catch (const nlohmann::json::exception& e) {
        throw bad(e.what());
    }
    return rep;
}

inline Json cert_to_json(const Graph& g, const ObstructionCert& c) {
    Json roles = Json::object();
    for (const auto& [role, v] : c.roles) roles[role] = g.label(v);
    return {{"family", c.family}, {"roles", roles}, {"path_params", c.path_params}};
}

inline Json model_to_json(const Graph& g, const OracleModel& m) { return {{"order", model_symbols(g, m)}}; }

inline Json labels_json(const Graph& g, std::span<const Vertex> vs) {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

inline Json verify_to_json(const Graph& g, const VerifyReport& r) {
    auto edges = [&](const std::vector<Edge>& es) {
        Json out = Json::array();
        for (auto [u, v] : es) out.push_back({g.label(u), g.label(v)});
        return out;
    };
    return {{"equal", r.equal}, {"missing", edges(r.missing)}, {"extra", edges(r.extra)}};
}

} // namespace cag
