#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tokendom/bitset.hpp"
#include "tokendom/domination.hpp"
#include "tokendom/errors.hpp"

namespace tokendom {

struct SolverLimits {
    std::size_t max_vertices = 500;
    std::uint64_t max_nodes = 100'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct SolveResult {
    std::vector<std::uint32_t> set; // minimum dominating set when optimal, best incumbent otherwise
    bool optimal = false;
    std::uint64_t nodes = 0;
    std::uint64_t lower_bound = 0; // == set.size() when optimal
};

namespace detail {

class SetCoverSearch {
public:
    SetCoverSearch(std::vector<Bitset> closed, std::vector<std::vector<std::uint32_t>> closed_ids,
                   std::size_t universe, const SolverLimits& limits)
        : closed_(std::move(closed)), closed_ids_(std::move(closed_ids)), universe_(universe), limits_(limits) {
        if (limits_.time_limit) deadline_ = std::chrono::steady_clock::now() + *limits_.time_limit;
    }

    SolveResult run(std::vector<std::uint32_t> incumbent) {
        best_ = std::move(incumbent);
        Bitset covered(universe_);
        std::vector<std::uint32_t> chosen;

        // Unit propagation: a vertex covered by a single candidate set has no
        // neighbors, so it must be in every dominating set. Candidate sets
        // never shrink, so once is enough.
        for (std::size_t v = 0; v < universe_; ++v) {
            if (closed_ids_[v].size() == 1) {
                chosen.push_back(static_cast<std::uint32_t>(v));
                covered |= closed_[v];
            }
        }

        root_lower_ = chosen.size() + bound_remaining(covered);
        dfs(covered, chosen);

        SolveResult res;
        res.set = best_;
        res.nodes = nodes_;
        res.optimal = !aborted_;
        res.lower_bound = res.optimal ? best_.size() : root_lower_;
        std::sort(res.set.begin(), res.set.end());
        return res;
    }

private:
    std::uint64_t bound_remaining(const Bitset& covered) const {
        std::size_t uncovered = universe_ - covered.count();
        if (uncovered == 0) return 0;
        std::size_t max_cover = 0;
        for (const Bitset& c : closed_)
            max_cover = std::max(max_cover, c.count_andnot(covered));
        return ceil_div(uncovered, max_cover);
    }

    bool out_of_budget() {
        if (nodes_ > limits_.max_nodes) return true;
        if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) return true;
        return false;
    }

    void dfs(const Bitset& covered, std::vector<std::uint32_t>& chosen) {
        ++nodes_;
        if (aborted_) return;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }

        std::size_t uncovered_count = universe_ - covered.count();
        if (uncovered_count == 0) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return; // even one more set cannot beat the incumbent

        // Coverage of each candidate against the current uncovered set.
        std::vector<std::size_t> gain(closed_.size());
        std::size_t max_cover = 0;
        for (std::size_t c = 0; c < closed_.size(); ++c) {
            gain[c] = closed_[c].count_andnot(covered);
            max_cover = std::max(max_cover, gain[c]);
        }
        if (chosen.size() + ceil_div(uncovered_count, max_cover) >= best_.size()) return;

        // Branch on the uncovered vertex with the fewest covering candidates.
        std::size_t branch_v = universe_;
        std::size_t fewest = ~std::size_t{0};
        for (std::size_t v = 0; v < universe_; ++v) {
            if (covered.test(v)) continue;
            if (closed_ids_[v].size() < fewest) {
                fewest = closed_ids_[v].size();
                branch_v = v;
            }
        }

        // Candidates covering the branch vertex, by decreasing fresh
        // coverage, colex-least first on ties.
        std::vector<std::uint32_t> order = closed_ids_[branch_v];
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return gain[a] > gain[b]; });

        for (std::uint32_t c : order) {
            if (gain[c] == 0) continue;
            Bitset next = covered;
            next |= closed_[c];
            chosen.push_back(c);
            dfs(next, chosen);
            chosen.pop_back();
            if (aborted_ || chosen.size() + 1 >= best_.size()) return;
        }
    }

    std::vector<Bitset> closed_;
    std::vector<std::vector<std::uint32_t>> closed_ids_;
    std::size_t universe_;
    SolverLimits limits_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<std::uint32_t> best_;
    std::uint64_t nodes_ = 0;
    std::uint64_t root_lower_ = 0;
    bool aborted_ = false;
};

} // namespace detail

/// Minimum dominating set by branch and bound over the set-cover formulation:
/// universe V(g), candidate sets the closed neighborhoods N[v]. Deterministic;
/// the greedy solution seeds the incumbent. If the node or time budget runs
/// out the best incumbent is returned with optimal = false.
template <AdjacencyQueryable G>
SolveResult exact_min_dominating(const G& g, const SolverLimits& limits = {}) {
    std::uint64_t n = g.vertex_count();
    if (n == 0) throw invalid_parameter("exact_min_dominating: empty graph");
    if (n > limits.max_vertices)
        throw resource_limit("exact_min_dominating: " + std::to_string(n) + " vertices exceeds solver limit " +
                             std::to_string(limits.max_vertices));

    std::vector<Bitset> closed;
    closed.reserve(n);
    std::vector<std::vector<std::uint32_t>> closed_ids(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        Bitset b(n);
        b.set(v);
        closed_ids[v].push_back(v);
        for (std::uint32_t w : g.neighbors_of(v)) {
            b.set(w);
            closed_ids[v].push_back(w);
        }
        std::sort(closed_ids[v].begin(), closed_ids[v].end());
        closed.push_back(std::move(b));
    }

    detail::SetCoverSearch search(std::move(closed), std::move(closed_ids), n, limits);
    return search.run(greedy_dominating(g));
}

} // namespace tokendom
