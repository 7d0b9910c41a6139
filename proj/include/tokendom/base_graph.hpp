#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tokendom/errors.hpp"
#include "tokendom/subsets.hpp"

namespace tokendom {

/// Simple undirected graph on at most 64 labeled vertices. Vertices are
/// addressed by index 0..vertex_count()-1; each index carries an integer
/// label. For the star S_n the labels are {0,...,n} with 0 the center, for
/// the complete graph K_n they are {1,...,n}. Immutable once built.
class BaseGraph {
public:
    static BaseGraph star(int n) {
        if (n < 1) throw invalid_parameter("star: need n >= 1 leaves");
        if (n + 1 > max_ground_size) throw resource_limit("star: base graph limited to 64 vertices");
        BaseGraph g;
        g.family_ = "star";
        g.family_param_ = n;
        g.labels_.resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) g.labels_[static_cast<std::size_t>(i)] = i;
        g.adj_.assign(g.labels_.size(), 0);
        for (int leaf = 1; leaf <= n; ++leaf) g.add_edge_by_index(0, leaf);
        return g;
    }

    static BaseGraph complete(int n) {
        if (n < 1) throw invalid_parameter("complete: need n >= 1 vertices");
        if (n > max_ground_size) throw resource_limit("complete: base graph limited to 64 vertices");
        BaseGraph g;
        g.family_ = "complete";
        g.family_param_ = n;
        g.labels_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) g.labels_[static_cast<std::size_t>(i)] = i + 1;
        g.adj_.assign(g.labels_.size(), 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge_by_index(u, v);
        return g;
    }

    /// Arbitrary graph from sorted distinct labels and label pairs.
    static BaseGraph custom(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges) {
        if (labels.empty()) throw invalid_parameter("custom: empty vertex set");
        if (labels.size() > static_cast<std::size_t>(max_ground_size))
            throw resource_limit("custom: base graph limited to 64 vertices");
        if (!std::is_sorted(labels.begin(), labels.end()) ||
            std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw invalid_parameter("custom: labels must be strictly increasing");
        BaseGraph g;
        g.family_ = "custom";
        g.family_param_ = static_cast<int>(labels.size());
        g.labels_ = std::move(labels);
        g.adj_.assign(g.labels_.size(), 0);
        for (auto [a, b] : edges) {
            int u = g.index_of_label(a);
            int v = g.index_of_label(b);
            if (u == v) throw invalid_parameter("custom: self-loop on label " + std::to_string(a));
            g.add_edge_by_index(u, v);
        }
        return g;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (Mask m : adj_) total += static_cast<std::size_t>(popcount(m));
        return total / 2;
    }

    bool adjacent(int u, int v) const {
        check_index(u);
        check_index(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    Mask neighbor_mask(int u) const {
        check_index(u);
        return adj_[static_cast<std::size_t>(u)];
    }

    int degree(int u) const { return popcount(neighbor_mask(u)); }

    int max_degree() const {
        int d = 0;
        for (Mask m : adj_) d = std::max(d, popcount(m));
        return d;
    }

    int min_degree() const {
        int d = max_ground_size;
        for (Mask m : adj_) d = std::min(d, popcount(m));
        return d;
    }

    Mask full_mask() const {
        std::size_t n = labels_.size();
        return (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
    }

    const std::vector<int>& labels() const { return labels_; }
    int label_of(int index) const {
        check_index(index);
        return labels_[static_cast<std::size_t>(index)];
    }

    int index_of_label(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label)
            throw invalid_parameter("label " + std::to_string(label) + " is not a vertex");
        return static_cast<int>(it - labels_.begin());
    }

    const std::string& family() const { return family_; }
    /// n of S_n / K_n; vertex count for custom graphs.
    int family_param() const { return family_param_; }

private:
    BaseGraph() = default;

    void add_edge_by_index(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
        adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }

    void check_index(int u) const {
        if (u < 0 || static_cast<std::size_t>(u) >= labels_.size())
            throw invalid_parameter("vertex index " + std::to_string(u) + " out of range");
    }

    std::string family_;
    int family_param_ = 0;
    std::vector<int> labels_;
    std::vector<Mask> adj_;
};

} // namespace tokendom
