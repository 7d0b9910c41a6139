#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tokendom/coverings.hpp"
#include "tokendom/domination.hpp"
#include "tokendom/errors.hpp"
#include "tokendom/token_graph.hpp"

namespace tokendom {

using ordered_json = nlohmann::ordered_json;

/// A token graph restored from its JSON form; adjacency comes from the rank
/// edge list, so it also carries arbitrary graphs.
struct ParsedGraph {
    std::string family;
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> vertices; // label lists in rank order
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::uint64_t vertex_count() const { return vertices.size(); }
    const std::vector<std::uint32_t>& neighbors_of(std::uint32_t v) const {
        return adjacency[static_cast<std::size_t>(v)];
    }

    std::uint32_t rank_of_labels(const std::vector<int>& labels) const {
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t r = 0; r < vertices.size(); ++r)
            if (vertices[r] == sorted) return static_cast<std::uint32_t>(r);
        throw invalid_parameter("set member is not a vertex of the graph");
    }
};

inline ordered_json graph_to_json(const TokenGraph& tg) {
    ordered_json j;
    j["family"] = tg.base().family();
    j["n"] = tg.base().family_param();
    j["k"] = tg.k();
    ordered_json verts = ordered_json::array();
    for (std::uint64_t r = 0; r < tg.vertex_count(); ++r)
        verts.push_back(tg.labels_of(tg.mask_of(static_cast<std::uint32_t>(r))));
    j["vertices"] = std::move(verts);
    ordered_json edges = ordered_json::array();
    for (std::uint64_t u = 0; u < tg.vertex_count(); ++u)
        for (std::uint32_t v : tg.neighbors_of(static_cast<std::uint32_t>(u)))
            if (u < v) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline ParsedGraph graph_from_json(const ordered_json& j) {
    ParsedGraph g;
    g.family = j.value("family", "custom");
    g.n = j.value("n", 0);
    g.k = j.value("k", 0);
    g.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
    for (auto& v : g.vertices) std::sort(v.begin(), v.end());
    g.adjacency.assign(g.vertices.size(), {});
    for (const auto& e : j.at("edges")) {
        std::uint64_t u = e.at(0).get<std::uint64_t>();
        std::uint64_t v = e.at(1).get<std::uint64_t>();
        if (u >= g.vertices.size() || v >= g.vertices.size() || u == v)
            throw invalid_parameter("graph JSON: bad edge");
        g.adjacency[u].push_back(static_cast<std::uint32_t>(v));
        g.adjacency[v].push_back(static_cast<std::uint32_t>(u));
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    return g;
}

/// DOT form of an explicit token graph; node ids are colex ranks, labels the
/// sorted member lists, e.g. "{0,2,5}".
inline void graph_to_dot(const TokenGraph& tg, std::ostream& out) {
    out << "graph {\n";
    for (std::uint64_t r = 0; r < tg.vertex_count(); ++r) {
        out << "  " << r << " [label=\"{";
        const std::vector<int> labels = tg.labels_of(tg.mask_of(static_cast<std::uint32_t>(r)));
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ",";
            out << labels[i];
        }
        out << "}\"];\n";
    }
    for (std::uint64_t u = 0; u < tg.vertex_count(); ++u)
        for (std::uint32_t v : tg.neighbors_of(static_cast<std::uint32_t>(u)))
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

inline ordered_json certificate_to_json(const DominationCertificate& c) {
    ordered_json j;
    j["family"] = c.family;
    j["n"] = c.n;
    j["k"] = c.k;
    j["method"] = c.method;
    j["size"] = c.size;
    j["set"] = c.set;
    j["verified"] = c.verified;
    j["optimal"] = c.optimal;
    j["lower_bound"] = c.lower_bound;
    j["upper_bound"] = c.upper_bound;
    return j;
}

inline DominationCertificate certificate_from_json(const ordered_json& j) {
    DominationCertificate c;
    c.family = j.value("family", "");
    c.n = j.value("n", 0);
    c.k = j.value("k", 0);
    c.method = j.value("method", "");
    c.set = j.at("set").get<std::vector<std::vector<int>>>();
    c.size = j.value("size", static_cast<std::uint64_t>(c.set.size()));
    c.verified = j.value("verified", false);
    c.optimal = j.value("optimal", false);
    c.lower_bound = j.value("lower_bound", std::uint64_t{0});
    c.upper_bound = j.value("upper_bound", std::uint64_t{0});
    return c;
}

/// A vertex set from JSON: either a bare array of label lists or any object
/// with a "set" field (a certificate qualifies).
inline std::vector<std::vector<int>> vertex_set_from_json(const ordered_json& j) {
    if (j.is_array()) return j.get<std::vector<std::vector<int>>>();
    if (j.is_object() && j.contains("set")) return j.at("set").get<std::vector<std::vector<int>>>();
    throw invalid_parameter("vertex-set JSON must be an array of label lists or contain a \"set\" field");
}

inline ordered_json design_to_json(const CoveringDesign& d) {
    ordered_json j;
    j["n"] = d.n;
    j["k"] = d.k;
    j["l"] = d.l;
    j["exact"] = d.exact;
    j["blocks"] = d.blocks;
    return j;
}

/// One block per line, members space-separated: the format used by published
/// covering tables.
inline void design_to_text(const CoveringDesign& d, std::ostream& out) {
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out << " ";
            out << block[i];
        }
        out << "\n";
    }
}

} // namespace tokendom
