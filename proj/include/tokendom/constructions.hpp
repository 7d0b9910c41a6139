#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tokendom/coverings.hpp"
#include "tokendom/domination.hpp"
#include "tokendom/errors.hpp"
#include "tokendom/subsets.hpp"
#include "tokendom/token_graph.hpp"

namespace tokendom {

inline int smallest_prime_factor(int m) {
    if (m < 2) throw invalid_parameter("smallest_prime_factor: need m >= 2");
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return d;
    return m;
}

/// Closed-form bounds on gamma for the star/complete token-graph families.
/// exact is filled only where an exact value is proved: F_2(S_n), F_2(K_n),
/// and F_3(K_n) with n = 2,6 (mod 12). Strict lower bounds are materialized
/// integrally: floor+1 when the bound is an integer, else ceiling.
struct GammaBounds {
    std::optional<std::uint64_t> exact;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::uint64_t degree_lower_form = 0; // ceil(|V| / (1 + max degree)), closed form
    std::string source;
};

namespace detail {

inline std::uint64_t strict_lower(std::uint64_t num, std::uint64_t den) {
    return num % den == 0 ? num / den + 1 : ceil_div(num, den);
}

} // namespace detail

/// The general F_k(K_n) sandwich, valid for 1 <= k <= n/2:
/// (1/k^2) C(n,k-1) < gamma(F_k(K_n)) <= (1/k) C(n,k-1).
inline std::uint64_t complete_fk_strict_lower(int n, int k) {
    return detail::strict_lower(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - 1)),
                                static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k));
}
inline std::uint64_t complete_fk_alpha_upper(int n, int k) {
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - 1)) / static_cast<unsigned>(k);
}

/// (1/k) C(n,k-1) < gamma(F_k(S_n)), materialized integrally.
inline std::uint64_t star_fk_strict_lower(int n, int k) {
    return detail::strict_lower(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - 1)),
                                static_cast<std::uint64_t>(k));
}

inline GammaBounds theoretical_gamma(const std::string& family, int n, int k) {
    GammaBounds g;
    if (family == "star") {
        if (n < 1 || k < 1 || k > n) throw invalid_parameter("theoretical_gamma: star needs 1 <= k <= n");
        int kk = std::min(k, n + 1 - k); // F_k(S_n) ~ F_{n+1-k}(S_n)
        if (kk <= 1) {
            g.lower = g.upper = 1;
            if (kk == 1) g.exact = 1; // F_1(S_n) = S_n, the center dominates
            else g.exact = 1;         // single-vertex graph
            g.degree_lower_form = 1;
            g.source = "star-trivial";
            return g;
        }
        if (kk == 2) {
            g.exact = static_cast<std::uint64_t>(n - 1);
            g.lower = g.upper = *g.exact;
            g.degree_lower_form = ceil_div(binomial(static_cast<unsigned>(n + 1), 2), static_cast<unsigned>(n));
            g.source = "star-f2-exact";
            return g;
        }
        g.lower = star_fk_strict_lower(n, kk);
        // V_0 (all k-sets through the center) dominates, giving C(n,k-1).
        g.upper = binomial(static_cast<unsigned>(n), static_cast<unsigned>(kk - 1));
        g.degree_lower_form = ceil_div(binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(kk)),
                                       static_cast<std::uint64_t>(n - kk + 2));
        g.source = "star-fk-bounds";
        return g;
    }
    if (family == "complete") {
        if (n < 1 || k < 1 || k > n) throw invalid_parameter("theoretical_gamma: complete needs 1 <= k <= n");
        if (k == 2 && n >= 2) {
            g.exact = static_cast<std::uint64_t>(n / 2);
            g.lower = g.upper = *g.exact;
            g.degree_lower_form = ceil_div(binomial(static_cast<unsigned>(n), 2),
                                           1 + 2 * static_cast<std::uint64_t>(n - 2));
            g.source = "complete-f2-exact";
            return g;
        }
        if (k == 3 && n >= 6 && (n % 12 == 2 || n % 12 == 6)) {
            g.exact = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) / 12 -
                      static_cast<std::uint64_t>(n) / 6;
            g.lower = g.upper = *g.exact;
            g.degree_lower_form =
                ceil_div(binomial(static_cast<unsigned>(n), 3), 1 + 3 * static_cast<std::uint64_t>(n - 3));
            g.source = "complete-f3-exact";
            return g;
        }
        int kk = std::min(k, n - k); // F_k(K_n) ~ F_{n-k}(K_n)
        if (kk <= 1) {
            g.lower = g.upper = 1;
            if (kk == 1) g.exact = 1; // gamma(K_n) = 1
            else g.exact = 1;         // single-vertex graph
            g.degree_lower_form = 1;
            g.source = "complete-trivial";
            return g;
        }
        if (kk == 3) {
            g.lower = mantel_lower_bound_f3(n);
            g.upper = binomial(static_cast<unsigned>(n), 2) / 3;
            g.source = "complete-f3-bounds";
        } else {
            g.lower = complete_fk_strict_lower(n, kk);
            g.upper = complete_fk_alpha_upper(n, kk);
            g.source = "complete-fk-bounds";
        }
        g.degree_lower_form =
            ceil_div(binomial(static_cast<unsigned>(n), static_cast<unsigned>(kk)),
                     1 + static_cast<std::uint64_t>(kk) * static_cast<std::uint64_t>(n - kk));
        return g;
    }
    throw invalid_parameter("theoretical_gamma: unknown family '" + family + "'");
}

/// D_ij = (V_0 \ {{0,i},{0,j}}) u {{i,j}}: the size n-1 dominating set of
/// F_2(S_n). Members come out in colex order.
inline std::vector<std::vector<int>> star_f2_construction(int n, int i, int j) {
    if (n < 2) throw invalid_parameter("star_f2_construction: need n >= 2");
    if (!(1 <= i && i < j && j <= n))
        throw invalid_parameter("star_f2_construction: need 1 <= i < j <= n");
    std::vector<std::vector<int>> out;
    for (int t = 1; t <= n; ++t)
        if (t != i && t != j) out.push_back({0, t});
    out.push_back({i, j});
    std::sort(out.begin(), out.end(), detail::colex_less);
    return out;
}

/// floor(n/2) pairwise-disjoint pairs {1,2},{3,4},...: a minimum dominating
/// set of F_2(K_n).
inline std::vector<std::vector<int>> complete_f2_construction(int n) {
    if (n < 2) throw invalid_parameter("complete_f2_construction: need n >= 2");
    std::vector<std::vector<int>> out;
    for (int i = 1; i + 1 <= n; i += 2) out.push_back({i, i + 1});
    return out;
}

/// The residue-filter construction for F_k(S_n), k >= 3, with p the smallest
/// prime factor of k-1.
struct StarFkPlan {
    int p = 0;
    std::map<int, std::vector<int>> residue_classes;                          // i -> {x in [n] : x = i (mod p)}
    std::vector<std::vector<int>> d1;                                         // {A through 0 : sum(A) != 1 (mod p)}
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> partition;   // (i,j) -> V'_ij
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> covers;      // (i,j) -> U'_ij
    std::map<std::pair<int, int>, bool> fallback;                             // class too small to host a cover
    std::vector<std::vector<int>> d2;
};

struct StarFkResult {
    DominationCertificate certificate;
    StarFkPlan plan;
};

namespace detail {

inline Mask label_mask(const std::vector<int>& labels) {
    Mask m = 0;
    for (int x : labels) m |= Mask{1} << x;
    return m;
}

} // namespace detail

inline StarFkResult star_fk_construction(int n, int k,
                                         std::uint64_t verify_budget = default_vertex_budget) {
    if (k < 3)
        throw invalid_parameter("star_fk_construction: need k >= 3 (use star_f2_construction for k = 2)");
    if (2 * k > n) throw invalid_parameter("star_fk_construction: need k <= n/2");

    StarFkPlan plan;
    plan.p = smallest_prime_factor(k - 1);
    const int p = plan.p;
    for (int i = 0; i < p; ++i) plan.residue_classes[i] = residue_class(n, i, p);

    // Split V_0 on the residue of the element sum: sums != 1 (mod p) go to
    // D_1, the rest are classified by their largest residue class.
    for_each_subset(n, k - 1, [&](Mask m) {
        std::vector<int> a_prime;
        int sum = 0;
        for (int pos : mask_positions(m)) {
            a_prime.push_back(pos + 1);
            sum += pos + 1;
        }
        if (sum % p != 1 % p) {
            std::vector<int> member = {0};
            member.insert(member.end(), a_prime.begin(), a_prime.end());
            plan.d1.push_back(member);
            return;
        }
        std::vector<int> count(static_cast<std::size_t>(p), 0);
        for (int x : a_prime) ++count[static_cast<std::size_t>(x % p)];
        int j = *std::max_element(count.begin(), count.end());
        int r = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
        std::vector<int> member = {0};
        member.insert(member.end(), a_prime.begin(), a_prime.end());
        plan.partition[{r, j}].push_back(member);
    });

    // Dominate each V'_ij: replace the residue-class part A'_i by the
    // colex-least block of a (j+1)-uniform cover of the j-subsets of the
    // class. Classes too small to host a cover dominate themselves.
    for (const auto& [key, members] : plan.partition) {
        auto [i, j] = key;
        const std::vector<int>& cls = plan.residue_classes[i];
        int m = static_cast<int>(cls.size());
        if (j + 1 > m) {
            plan.fallback[key] = true;
            for (const auto& a : members) plan.d2.push_back(a);
            continue;
        }
        CoveringDesign cover = greedy_cover(m, j + 1, j);
        std::vector<std::vector<int>> blocks;
        std::vector<Mask> block_masks;
        for (const auto& blk : cover.blocks) {
            std::vector<int> mapped;
            for (int x : blk) mapped.push_back(cls[static_cast<std::size_t>(x - 1)]);
            block_masks.push_back(detail::label_mask(mapped));
            blocks.push_back(std::move(mapped));
        }
        plan.covers[key] = blocks;
        for (const auto& a : members) {
            std::vector<int> in_class, rest;
            for (int x : a)
                if (x != 0) (x % p == i ? in_class : rest).push_back(x);
            Mask need = detail::label_mask(in_class);
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if ((need & ~block_masks[b]) != 0) continue;
                std::vector<int> member = rest;
                member.insert(member.end(), blocks[b].begin(), blocks[b].end());
                std::sort(member.begin(), member.end());
                plan.d2.push_back(member);
                break;
            }
        }
    }
    detail::sort_blocks(plan.d2);
    detail::sort_blocks(plan.d1);

    std::vector<std::vector<int>> all = plan.d1;
    all.insert(all.end(), plan.d2.begin(), plan.d2.end());
    detail::sort_blocks(all);

    GammaBounds bounds = theoretical_gamma("star", n, k);
    StarFkResult res;
    res.plan = std::move(plan);
    res.certificate.family = "star";
    res.certificate.n = n;
    res.certificate.k = k;
    res.certificate.method = "star-fk-residue";
    res.certificate.set = all;
    res.certificate.size = all.size();
    res.certificate.lower_bound = std::max(bounds.lower, bounds.degree_lower_form);
    res.certificate.upper_bound = all.size();
    if (binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)) <= verify_budget) {
        TokenGraph tg(BaseGraph::star(n), k, Mode::Explicit, verify_budget);
        std::vector<std::uint32_t> ranks;
        for (const auto& member : all) ranks.push_back(tg.rank_of_labels(member));
        res.certificate.verified = is_dominating(tg, ranks).dominating;
    }
    return res;
}

/// Split [n] into halves and cover the 2-sets of each half by triples:
/// Steiner systems when the half size allows, greedy covers otherwise.
inline DominationCertificate complete_f3_construction(int n,
                                                      std::uint64_t verify_budget = default_vertex_budget) {
    if (n < 4) throw invalid_parameter("complete_f3_construction: need n >= 4");
    int h1 = n / 2;
    int h2 = n - h1;

    auto half_blocks = [](int m, int offset, int pad_label) {
        std::vector<std::vector<int>> out;
        if (m == 2) {
            // A 2-element half cannot host its own triple; pad its single
            // pair with the smallest label of the other half.
            std::vector<int> b = {offset + 1, offset + 2, pad_label};
            std::sort(b.begin(), b.end());
            out.push_back(b);
            return out;
        }
        CoveringDesign d;
        if (m % 6 == 3)
            d = bose_sts(m);
        else if (m % 6 == 1 && m >= 7)
            d = skolem_sts(m);
        else
            d = greedy_cover(m, 3, 2);
        for (const auto& blk : d.blocks) {
            std::vector<int> mapped;
            for (int x : blk) mapped.push_back(x + offset);
            out.push_back(mapped);
        }
        return out;
    };

    std::vector<std::vector<int>> blocks = half_blocks(h1, 0, h1 + 1);
    std::vector<std::vector<int>> second = half_blocks(h2, h1, 1);
    blocks.insert(blocks.end(), second.begin(), second.end());
    detail::sort_blocks(blocks);

    DominationCertificate cert;
    cert.family = "complete";
    cert.n = n;
    cert.k = 3;
    cert.method = "complete-f3-split-sts";
    cert.set = blocks;
    cert.size = blocks.size();
    cert.lower_bound = mantel_lower_bound_f3(n);
    cert.upper_bound = blocks.size();
    if (binomial(static_cast<unsigned>(n), 3) <= verify_budget) {
        TokenGraph tg(BaseGraph::complete(n), 3, Mode::Explicit, verify_budget);
        std::vector<std::uint32_t> ranks;
        for (const auto& member : blocks) ranks.push_back(tg.rank_of_labels(member));
        cert.verified = is_dominating(tg, ranks).dominating;
    }
    cert.optimal = cert.verified && cert.size == cert.lower_bound;
    return cert;
}

/// gamma(F_k(K_n)) <= (1/k) C(n,k-1) via a maximal independent set, which is
/// always dominating. Deterministic colex scan.
inline DominationCertificate complete_fk_construction(int n, int k,
                                                      std::uint64_t vertex_budget = default_vertex_budget) {
    if (k < 1 || 2 * k > n) throw invalid_parameter("complete_fk_construction: need 1 <= k <= n/2");
    GammaBounds bounds = theoretical_gamma("complete", n, k);
    DominationCertificate cert;
    cert.family = "complete";
    cert.n = n;
    cert.k = k;
    cert.method = "complete-fk-mis";
    cert.lower_bound = std::max(bounds.lower, bounds.degree_lower_form);
    if (k == 1) {
        cert.set = {{1}};
        cert.size = 1;
        cert.verified = true;
        cert.optimal = true;
        cert.lower_bound = 1;
        cert.upper_bound = 1;
        return cert;
    }
    TokenGraph tg(BaseGraph::complete(n), k, Mode::Explicit, vertex_budget);
    std::vector<std::uint32_t> mis = greedy_maximal_independent(tg);
    for (std::uint32_t r : mis) cert.set.push_back(tg.labels_of(tg.mask_of(r)));
    cert.size = mis.size();
    cert.upper_bound = mis.size();
    cert.verified = is_dominating(tg, mis).dominating;
    cert.optimal = cert.verified && cert.size == cert.lower_bound;
    return cert;
}

/// Dispatch to the family construction and wrap it in a certificate.
/// For star k=2 the default D_ij uses i=1, j=2.
inline DominationCertificate construction_certificate(const std::string& family, int n, int k,
                                                      std::uint64_t vertex_budget = default_vertex_budget) {
    if (family == "star") {
        if (k == 1) {
            DominationCertificate cert;
            cert.family = "star";
            cert.n = n;
            cert.k = 1;
            cert.method = "star-center";
            cert.set = {{0}};
            cert.size = 1;
            cert.lower_bound = 1;
            cert.upper_bound = 1;
            cert.verified = true;
            cert.optimal = true;
            return cert;
        }
        if (k == 2) {
            std::vector<std::vector<int>> d = star_f2_construction(n, 1, 2);
            TokenGraph tg(BaseGraph::star(n), 2, Mode::Explicit, vertex_budget);
            std::vector<std::uint32_t> ranks;
            for (const auto& member : d) ranks.push_back(tg.rank_of_labels(member));
            DominationCertificate cert;
            cert.family = "star";
            cert.n = n;
            cert.k = 2;
            cert.method = "star-f2-Dij";
            cert.set = d;
            cert.size = d.size();
            cert.lower_bound = static_cast<std::uint64_t>(n - 1);
            cert.upper_bound = d.size();
            cert.verified = is_dominating(tg, ranks).dominating;
            cert.optimal = cert.verified && cert.size == cert.lower_bound;
            return cert;
        }
        return star_fk_construction(n, k, vertex_budget).certificate;
    }
    if (family == "complete") {
        if (k == 2) {
            std::vector<std::vector<int>> d = complete_f2_construction(n);
            TokenGraph tg(BaseGraph::complete(n), 2, Mode::Explicit, vertex_budget);
            std::vector<std::uint32_t> ranks;
            for (const auto& member : d) ranks.push_back(tg.rank_of_labels(member));
            DominationCertificate cert;
            cert.family = "complete";
            cert.n = n;
            cert.k = 2;
            cert.method = "complete-f2-disjoint";
            cert.set = d;
            cert.size = d.size();
            cert.lower_bound = static_cast<std::uint64_t>(n / 2);
            cert.upper_bound = d.size();
            cert.verified = is_dominating(tg, ranks).dominating;
            cert.optimal = cert.verified && cert.size == cert.lower_bound;
            return cert;
        }
        if (k == 3) return complete_f3_construction(n, vertex_budget);
        return complete_fk_construction(n, k, vertex_budget);
    }
    throw invalid_parameter("construction_certificate: unknown family '" + family + "'");
}

} // namespace tokendom
