#pragma once

#include "pcls/corpus.hpp"
#include "pcls/errors.hpp"
#include "pcls/exponent.hpp"
#include "pcls/marked_graph.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace pcls::io {

using nlohmann::json;

// Graph files: {"vertices": [names...], "edges": [[a,b]...],
// "odd": [names...], "isotropic": [names...]}.  The marking arrays are
// optional.  "corpus:KEY" bypasses the filesystem.
inline MarkedGraph load_graph(const std::string& pathOrKey) {
    if (pathOrKey.rfind("corpus:", 0) == 0)
        return corpus_graph(pathOrKey.substr(7));
    std::ifstream in(pathOrKey);
    if (!in) throw InvalidInput("cannot open graph file: " + pathOrKey);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInput("graph file is not valid JSON: " + std::string(e.what()));
    }
    GraphSpec spec;
    try {
        if (!j.is_object() || !j.contains("vertices"))
            throw InvalidInput("graph file: missing \"vertices\"");
        spec.vertices = j.at("vertices").get<std::vector<std::string>>();
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw InvalidInput("graph file: each edge must be a pair");
                spec.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
            }
        if (j.contains("odd")) spec.odd = j.at("odd").get<std::vector<std::string>>();
        if (j.contains("isotropic"))
            spec.isotropic = j.at("isotropic").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw InvalidInput("graph file: unexpected shape: " + std::string(e.what()));
    }
    return MarkedGraph::validate(spec);
}

// Multidegrees arrive as {"vertexName": positive integer, ...}.
inline ExponentVec parse_multidegree(const MarkedGraph& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput("--m is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw InvalidInput("--m must be a JSON object");
    ExponentVec m;
    for (const auto& [name, val] : j.items()) {
        auto id = g.id_of(name);
        if (!id) throw InvalidInput("UnknownVertex: \"" + name + "\" in --m");
        if (!val.is_number_integer() || val.get<long long>() <= 0)
            throw InvalidInput("--m entries must be positive integers");
        m.set(*id, static_cast<int>(val.get<long long>()));
    }
    return m;
}

inline json multidegree_json(const MarkedGraph& g, const ExponentVec& m) {
    json j = json::object();
    for (const auto& [v, e] : m.terms()) j[g.name(v)] = e;
    return j;
}

inline std::vector<int> parse_vertex_list(const MarkedGraph& g, const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string name = csv.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        auto id = g.id_of(name);
        if (!id) throw InvalidInput("UnknownVertex: \"" + name + "\" in --K");
        out.push_back(*id);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace pcls::io
