#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plumbing_tree.hpp"

namespace plumbook {

using json = nlohmann::ordered_json;

inline json tree_to_json(const PlumbingTree& t) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : t.vertices()) j["vertices"].push_back({{"id", v.id}, {"euler", v.euler}});
    j["edges"] = json::array();
    for (const auto& [a, b] : t.edge_ids()) j["edges"].push_back(json::array({a, b}));
    return j;
}

/// Throws ValidationError on schema violations as well as tree invariants.
inline PlumbingTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("json tree: expected object with 'vertices' and 'edges'");
    std::vector<PlumbingTree::Vertex> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    try {
        for (const auto& v : j.at("vertices"))
            vs.push_back({v.at("id").get<std::string>(), v.at("euler").get<long long>()});
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ValidationError("json tree: edge must be a pair");
            es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("json tree: ") + ex.what());
    }
    return PlumbingTree(std::move(vs), std::move(es));
}

inline std::string export_json(const PlumbingTree& t) { return tree_to_json(t).dump(2) + "\n"; }

inline PlumbingTree import_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ValidationError(std::string("json tree: ") + ex.what());
    }
    return tree_from_json(j);
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

inline std::string export_dot(const PlumbingTree& t) {
    std::string out = "graph plumbing {\n";
    for (const auto& v : t.vertices())
        out += "  " + dot_quote(v.id) + " [label=\"" + std::to_string(v.euler) + "\"];\n";
    for (const auto& [a, b] : t.edge_ids()) out += "  " + dot_quote(a) + " -- " + dot_quote(b) + ";\n";
    return out + "}\n";
}

}  // namespace plumbook
