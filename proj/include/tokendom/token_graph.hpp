#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tokendom/base_graph.hpp"
#include "tokendom/errors.hpp"
#include "tokendom/subsets.hpp"

namespace tokendom {

enum class Mode { Explicit, Implicit };

inline constexpr std::uint64_t default_vertex_budget = 200000;

/// The k-token graph F_k(G): vertices are the k-subsets of V(G), two of them
/// adjacent when their symmetric difference is {u,v} with uv an edge of G.
/// Vertices are indexed by colex rank of their index mask. Explicit mode
/// materializes the full adjacency (CSR); implicit mode answers neighbor
/// queries through the sliding oracle only.
class TokenGraph {
public:
    TokenGraph(BaseGraph base, int k, Mode mode, std::uint64_t vertex_budget = default_vertex_budget)
        : base_(std::move(base)), k_(k) {
        int n = base_.vertex_count();
        // k = n is allowed as the degenerate single-vertex graph so that the
        // F_2(K_2) corner of the complete family stays constructible.
        if (k < 1 || k > n)
            throw invalid_parameter("token graph: need 1 <= k <= " + std::to_string(n) +
                                    " for a base graph on " + std::to_string(n) + " vertices");
        vertex_count_ = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        if (mode == Mode::Explicit) {
            if (vertex_count_ > vertex_budget)
                throw resource_limit("explicit token graph: C(" + std::to_string(n) + "," + std::to_string(k) +
                                     ") = " + std::to_string(vertex_count_) + " vertices exceeds vertex budget " +
                                     std::to_string(vertex_budget));
            materialize();
        }
    }

    const BaseGraph& base() const { return base_; }
    int k() const { return k_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    bool is_explicit() const { return explicit_; }

    std::uint64_t edge_count() const {
        require_explicit();
        return edge_count_;
    }

    /// Neighbor vertices of the k-set `v`, as masks in colex order.
    /// Exactly { (v \ {a}) u {b} : a in v, b not in v, ab an edge of G }.
    std::vector<Mask> neighbor_sets(Mask v) const {
        check_mask(v);
        std::vector<Mask> out;
        Mask rest = base_.full_mask() & ~v;
        for (Mask a = v; a != 0; a &= a - 1) {
            int i = std::countr_zero(a);
            Mask slide = base_.neighbor_mask(i) & rest;
            for (Mask b = slide; b != 0; b &= b - 1) {
                int j = std::countr_zero(b);
                out.push_back((v ^ (Mask{1} << i)) | (Mask{1} << j));
            }
        }
        std::sort(out.begin(), out.end()); // numeric order == colex order
        return out;
    }

    std::span<const std::uint32_t> neighbors_of(std::uint32_t rank) const {
        require_explicit();
        if (rank >= vertex_count_) throw invalid_parameter("vertex rank out of range");
        return {adj_.data() + offsets_[rank], adj_.data() + offsets_[rank + 1]};
    }

    /// Neighbor ranks computed through the oracle; works in either mode.
    std::vector<std::uint32_t> neighbor_ranks(std::uint32_t rank) const {
        if (rank >= vertex_count_) throw invalid_parameter("vertex rank out of range");
        std::vector<std::uint32_t> out;
        for (Mask m : neighbor_sets(mask_of(rank))) out.push_back(rank_of(m));
        return out;
    }

    Mask mask_of(std::uint32_t rank) const {
        if (explicit_) {
            if (rank >= vertex_count_) throw invalid_parameter("vertex rank out of range");
            return masks_[rank];
        }
        return colex_unrank(rank, base_.vertex_count(), k_);
    }

    std::uint32_t rank_of(Mask v) const {
        check_mask(v);
        return static_cast<std::uint32_t>(colex_rank(v));
    }

    int degree(std::uint32_t rank) const {
        require_explicit();
        if (rank >= vertex_count_) throw invalid_parameter("vertex rank out of range");
        return static_cast<int>(offsets_[rank + 1] - offsets_[rank]);
    }

    int max_degree() const {
        require_explicit();
        int d = 0;
        for (std::uint64_t v = 0; v < vertex_count_; ++v)
            d = std::max(d, degree(static_cast<std::uint32_t>(v)));
        return d;
    }

    int min_degree() const {
        require_explicit();
        int d = static_cast<int>(vertex_count_);
        for (std::uint64_t v = 0; v < vertex_count_; ++v)
            d = std::min(d, degree(static_cast<std::uint32_t>(v)));
        return d;
    }

    std::vector<int> labels_of(Mask v) const {
        std::vector<int> out;
        for (int p : mask_positions(v)) out.push_back(base_.label_of(p));
        return out;
    }

    Mask mask_of_labels(const std::vector<int>& labels) const {
        Mask m = 0;
        for (int l : labels) m |= Mask{1} << base_.index_of_label(l);
        if (popcount(m) != k_ || static_cast<std::size_t>(k_) != labels.size())
            throw invalid_parameter("vertex must be a set of exactly k distinct labels");
        return m;
    }

    std::uint32_t rank_of_labels(const std::vector<int>& labels) const { return rank_of(mask_of_labels(labels)); }

private:
    void materialize() {
        int n = base_.vertex_count();
        masks_.reserve(vertex_count_);
        for_each_subset(n, k_, [&](Mask m) { masks_.push_back(m); });
        offsets_.assign(vertex_count_ + 1, 0);
        for (std::uint64_t r = 0; r < vertex_count_; ++r)
            offsets_[r + 1] = offsets_[r] + neighbor_sets(masks_[r]).size();
        adj_.resize(offsets_[vertex_count_]);
        for (std::uint64_t r = 0; r < vertex_count_; ++r) {
            std::size_t at = offsets_[r];
            for (Mask m : neighbor_sets(masks_[r])) adj_[at++] = static_cast<std::uint32_t>(colex_rank(m));
        }
        edge_count_ = adj_.size() / 2;
        explicit_ = true;
    }

    void require_explicit() const {
        if (!explicit_) throw invalid_parameter("operation requires an explicit token graph");
    }

    void check_mask(Mask v) const {
        if ((v & ~base_.full_mask()) != 0 || popcount(v) != k_)
            throw invalid_parameter("not a valid k-subset of the base vertex set");
    }

    BaseGraph base_;
    int k_;
    std::uint64_t vertex_count_ = 0;
    bool explicit_ = false;
    std::uint64_t edge_count_ = 0;
    std::vector<Mask> masks_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adj_;
};

} // namespace tokendom
