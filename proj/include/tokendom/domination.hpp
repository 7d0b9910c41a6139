#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "tokendom/errors.hpp"
#include "tokendom/subsets.hpp"
#include "tokendom/token_graph.hpp"

namespace tokendom {

/// Anything with indexed vertices and explicit neighbor access; satisfied by
/// an explicit TokenGraph. Vertex ids double as the canonical (colex) order.
template <typename G>
concept AdjacencyQueryable = requires(const G& g, std::uint32_t v) {
    { g.vertex_count() } -> std::convertible_to<std::uint64_t>;
    { g.neighbors_of(v) };
};

struct DominationCheck {
    bool dominating = false;
    std::optional<std::uint32_t> witness; // least undominated vertex when not dominating
};

/// True iff every vertex is in `set` or adjacent to a member of `set`.
template <AdjacencyQueryable G>
DominationCheck is_dominating(const G& g, std::span<const std::uint32_t> set) {
    std::uint64_t n = g.vertex_count();
    std::vector<bool> covered(n, false);
    for (std::uint32_t v : set) {
        if (v >= n) throw invalid_parameter("dominating-set member " + std::to_string(v) + " is not a vertex");
        covered[v] = true;
        for (std::uint32_t w : g.neighbors_of(v)) covered[w] = true;
    }
    for (std::uint64_t v = 0; v < n; ++v)
        if (!covered[v]) return {false, static_cast<std::uint32_t>(v)};
    return {true, std::nullopt};
}

template <AdjacencyQueryable G>
DominationCheck is_dominating(const G& g, const std::vector<std::uint32_t>& set) {
    return is_dominating(g, std::span<const std::uint32_t>(set));
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// still-undominated vertices, ties to the colex-least vertex.
template <AdjacencyQueryable G>
std::vector<std::uint32_t> greedy_dominating(const G& g) {
    std::uint64_t n = g.vertex_count();
    if (n == 0) throw invalid_parameter("greedy_dominating: empty graph");
    std::vector<bool> covered(n, false);
    std::uint64_t remaining = n;
    std::vector<std::uint32_t> out;
    while (remaining > 0) {
        std::uint32_t best = 0;
        std::uint64_t best_gain = 0;
        for (std::uint64_t v = 0; v < n; ++v) {
            std::uint64_t gain = covered[v] ? 0 : 1;
            for (std::uint32_t w : g.neighbors_of(static_cast<std::uint32_t>(v)))
                if (!covered[w]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<std::uint32_t>(v);
            }
        }
        out.push_back(best);
        if (!covered[best]) {
            covered[best] = true;
            --remaining;
        }
        for (std::uint32_t w : g.neighbors_of(best))
            if (!covered[w]) {
                covered[w] = true;
                --remaining;
            }
    }
    return out;
}

/// Maximal independent set by colex scan; maximality makes it dominating.
template <AdjacencyQueryable G>
std::vector<std::uint32_t> greedy_maximal_independent(const G& g) {
    std::uint64_t n = g.vertex_count();
    if (n == 0) throw invalid_parameter("greedy_maximal_independent: empty graph");
    std::vector<bool> blocked(n, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t v = 0; v < n; ++v) {
        if (blocked[v]) continue;
        out.push_back(static_cast<std::uint32_t>(v));
        for (std::uint32_t w : g.neighbors_of(static_cast<std::uint32_t>(v))) blocked[w] = true;
    }
    return out;
}

struct BoundsReport {
    std::uint64_t max_degree_lower = 0;                       // ceil(|V| / (1 + max degree))
    std::optional<std::uint64_t> min_degree_log_upper;        // floor(|V| (1+ln(d+1))/(d+1)), only when d > 1
    std::optional<std::uint64_t> mantel_lower;                // F_3(K_n) only
    std::optional<std::uint64_t> independence_upper_formula;  // token graphs of star/complete only
};

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// gamma(F_3(K_n)) >= ceil((C(n,2) - floor(n^2/4)) / 3): a dominating set
/// covers three 2-sets per element and the uncovered 2-sets form a
/// triangle-free graph, so Mantel caps them at floor(n^2/4).
inline std::uint64_t mantel_lower_bound_f3(int n) {
    if (n < 3) throw invalid_parameter("mantel_lower_bound_f3: need n >= 3");
    std::uint64_t pairs = binomial(static_cast<unsigned>(n), 2);
    std::uint64_t mantel_edges = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) / 4;
    return ceil_div(pairs - mantel_edges, 3);
}

template <AdjacencyQueryable G>
std::uint64_t graph_max_degree(const G& g) {
    std::uint64_t d = 0;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        d = std::max(d, static_cast<std::uint64_t>(std::ranges::distance(g.neighbors_of(static_cast<std::uint32_t>(v)))));
    return d;
}

template <AdjacencyQueryable G>
std::uint64_t graph_min_degree(const G& g) {
    std::uint64_t d = ~std::uint64_t{0};
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        d = std::min(d, static_cast<std::uint64_t>(std::ranges::distance(g.neighbors_of(static_cast<std::uint32_t>(v)))));
    return d;
}

template <AdjacencyQueryable G>
BoundsReport degree_bounds(const G& g) {
    std::uint64_t n = g.vertex_count();
    if (n == 0) throw invalid_parameter("degree_bounds: empty graph");
    BoundsReport r;
    r.max_degree_lower = ceil_div(n, 1 + graph_max_degree(g));
    std::uint64_t delta = graph_min_degree(g);
    if (delta > 1) {
        double nn = static_cast<double>(n);
        double d1 = static_cast<double>(delta) + 1.0;
        r.min_degree_log_upper = static_cast<std::uint64_t>(std::floor(nn * (1.0 + std::log(d1)) / d1));
    }
    return r;
}

/// degree_bounds plus the token-graph-specific fields.
inline BoundsReport degree_bounds(const TokenGraph& tg) {
    BoundsReport r = degree_bounds<TokenGraph>(tg);
    const BaseGraph& b = tg.base();
    int n = b.family_param();
    int k = tg.k();
    if (b.family() == "complete") {
        if (k == 3) r.mantel_lower = mantel_lower_bound_f3(n);
        // alpha(K_n) = 1, so gamma <= alpha(F_k) <= (1/k) C(n,k-1)
        r.independence_upper_formula =
            binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - 1)) / static_cast<unsigned>(k);
    } else if (b.family() == "star") {
        // alpha(S_n) = n (the leaves)
        r.independence_upper_formula =
            binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - 1)) * static_cast<std::uint64_t>(n) /
            static_cast<unsigned>(k);
    }
    return r;
}

/// A dominating set plus how it was obtained and what brackets it.
struct DominationCertificate {
    std::string family;
    int n = 0;
    int k = 0;
    std::string method;                 // exact | greedy | construction tag
    std::vector<std::vector<int>> set;  // members as sorted label lists, colex order
    std::uint64_t size = 0;
    bool verified = false;
    bool optimal = false;
    std::uint64_t lower_bound = 0;
    std::uint64_t upper_bound = 0;
};

/// Assemble a certificate for a vertex-rank set on a token graph, verifying
/// domination as part of construction.
inline DominationCertificate certify(const TokenGraph& tg, std::vector<std::uint32_t> ranks,
                                     const std::string& method, std::uint64_t lower_bound, bool optimal) {
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    DominationCertificate cert;
    cert.family = tg.base().family();
    cert.n = tg.base().family_param();
    cert.k = tg.k();
    cert.method = method;
    cert.size = ranks.size();
    cert.lower_bound = lower_bound;
    cert.upper_bound = ranks.size();
    cert.verified = is_dominating(tg, ranks).dominating;
    cert.optimal = optimal || (cert.verified && lower_bound == cert.size);
    for (std::uint32_t r : ranks) cert.set.push_back(tg.labels_of(tg.mask_of(r)));
    return cert;
}

} // namespace tokendom
