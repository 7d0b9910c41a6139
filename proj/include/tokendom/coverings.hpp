#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tokendom/errors.hpp"
#include "tokendom/subsets.hpp"

namespace tokendom {

/// An (n,k,l) covering design: k-subsets of [n] = {1,...,n} that together
/// contain every l-subset. exact means every l-subset appears in exactly one
/// block (for l=2, k=3 that is a Steiner triple system).
struct CoveringDesign {
    int n = 0;
    int k = 0;
    int l = 0;
    std::vector<std::vector<int>> blocks; // members sorted, blocks in colex order
    bool exact = false;
};

struct CoverReport {
    bool covering = false;
    bool exact = false;
    std::uint64_t min_multiplicity = 0;
    std::uint64_t max_multiplicity = 0;
    std::optional<std::vector<int>> uncovered; // colex-least uncovered l-set when not covering
};

namespace detail {

/// Colex order on equal-length sorted label lists: compare largest elements first.
inline bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline std::string block_to_string(const std::vector<int>& block) {
    std::string s = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(block[i]);
    }
    return s + "}";
}

inline void sort_blocks(std::vector<std::vector<int>>& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), colex_less);
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
}

} // namespace detail

inline std::uint64_t trivial_cover_lower_bound(int n, int k, int l) {
    if (!(1 <= l && l < k && k <= n))
        throw invalid_parameter("covering parameters must satisfy 1 <= l < k <= n");
    std::uint64_t num = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
    std::uint64_t den = binomial(static_cast<unsigned>(k), static_cast<unsigned>(l));
    return (num + den - 1) / den;
}

/// Per-l-set coverage multiplicities. Fails with the colex-least uncovered
/// l-set; malformed blocks raise invalid_parameter naming the block.
inline CoverReport verify_cover(const CoveringDesign& d) {
    if (!(1 <= d.l && d.l < d.k && d.k <= d.n))
        throw invalid_parameter("covering parameters must satisfy 1 <= l < k <= n");
    for (const auto& block : d.blocks) {
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        bool ok = sorted.size() == static_cast<std::size_t>(d.k) &&
                  std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        for (int x : sorted)
            if (x < 1 || x > d.n) ok = false;
        if (!ok)
            throw invalid_parameter("malformed block " + detail::block_to_string(block) +
                                    ": not a " + std::to_string(d.k) + "-subset of [" + std::to_string(d.n) + "]");
    }

    std::uint64_t lsets = binomial(static_cast<unsigned>(d.n), static_cast<unsigned>(d.l));
    std::vector<std::uint32_t> mult(lsets, 0);
    for (const auto& block : d.blocks) {
        std::vector<int> pos;
        for (int x : block) pos.push_back(x - 1);
        std::sort(pos.begin(), pos.end());
        for_each_subset(d.k, d.l, [&](Mask slots) {
            Mask lmask = 0;
            for (int s : mask_positions(slots)) lmask |= Mask{1} << pos[static_cast<std::size_t>(s)];
            ++mult[colex_rank(lmask)];
        });
    }

    CoverReport rep;
    rep.min_multiplicity = ~std::uint64_t{0};
    rep.max_multiplicity = 0;
    for (std::uint64_t r = 0; r < lsets; ++r) {
        rep.min_multiplicity = std::min<std::uint64_t>(rep.min_multiplicity, mult[r]);
        rep.max_multiplicity = std::max<std::uint64_t>(rep.max_multiplicity, mult[r]);
        if (mult[r] == 0 && !rep.uncovered) {
            std::vector<int> labels;
            for (int p : mask_positions(colex_unrank(r, d.n, d.l))) labels.push_back(p + 1);
            rep.uncovered = labels;
        }
    }
    if (lsets == 0) rep.min_multiplicity = 0;
    rep.covering = !rep.uncovered.has_value();
    rep.exact = rep.covering && rep.min_multiplicity == 1 && rep.max_multiplicity == 1;
    return rep;
}

/// Greedy covering: repeatedly add the k-set covering the most uncovered
/// l-sets, colex-least on ties.
inline CoveringDesign greedy_cover(int n, int k, int l, std::uint64_t enumeration_budget = 1'000'000) {
    if (!(1 <= l && l < k && k <= n))
        throw invalid_parameter("covering parameters must satisfy 1 <= l < k <= n");
    std::uint64_t lsets = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
    std::uint64_t ksets = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (lsets > enumeration_budget || ksets > enumeration_budget)
        throw resource_limit("greedy_cover: C(n,l)=" + std::to_string(lsets) + ", C(n,k)=" + std::to_string(ksets) +
                             " exceeds enumeration budget " + std::to_string(enumeration_budget));

    std::vector<bool> covered(lsets, false);
    std::uint64_t remaining = lsets;
    CoveringDesign d;
    d.n = n;
    d.k = k;
    d.l = l;

    auto lsubset_ranks = [&](Mask kmask) {
        std::vector<std::uint64_t> out;
        std::vector<int> pos = mask_positions(kmask);
        for_each_subset(k, l, [&](Mask slots) {
            Mask lmask = 0;
            for (int s : mask_positions(slots)) lmask |= Mask{1} << pos[static_cast<std::size_t>(s)];
            out.push_back(colex_rank(lmask));
        });
        return out;
    };

    while (remaining > 0) {
        Mask best = 0;
        std::uint64_t best_gain = 0;
        for_each_subset(n, k, [&](Mask cand) {
            std::uint64_t gain = 0;
            for (std::uint64_t r : lsubset_ranks(cand))
                if (!covered[r]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = cand;
            }
        });
        for (std::uint64_t r : lsubset_ranks(best))
            if (!covered[r]) {
                covered[r] = true;
                --remaining;
            }
        std::vector<int> labels;
        for (int p : mask_positions(best)) labels.push_back(p + 1);
        d.blocks.push_back(labels);
    }

    detail::sort_blocks(d.blocks);
    d.exact = verify_cover(d).exact;
    return d;
}

/// Steiner triple system for n = 3t, t odd (n = 3 mod 6). Points are
/// Z_t x {0,1,2}; the operation x*y = (x+y)(t+1)/2 mod t is an idempotent
/// commutative quasigroup. Vertical blocks {(x,0),(x,1),(x,2)}, mixed blocks
/// {(x,i),(y,i),(x*y,i+1)}.
inline CoveringDesign bose_sts(int n) {
    if (n < 3 || n % 6 != 3) throw invalid_parameter("bose_sts: need n = 3 (mod 6), n >= 3");
    int t = n / 3;
    auto point = [&](int x, int col) { return col * t + x + 1; };
    auto op = [&](int x, int y) { return static_cast<int>((static_cast<long long>(x + y) * ((t + 1) / 2)) % t); };

    CoveringDesign d;
    d.n = n;
    d.k = 3;
    d.l = 2;
    for (int x = 0; x < t; ++x) d.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int x = 0; x < t; ++x)
        for (int y = x + 1; y < t; ++y)
            for (int col = 0; col < 3; ++col)
                d.blocks.push_back({point(x, col), point(y, col), point(op(x, y), (col + 1) % 3)});

    detail::sort_blocks(d.blocks);
    d.exact = verify_cover(d).exact;
    return d;
}

/// Steiner triple system for n = 6m+1 (n = 1 mod 6). Points are
/// Z_2m x {0,1,2} plus one infinity point; built from the half-idempotent
/// commutative quasigroup x*y = a(x+y mod 2m) with a(2i) = i, a(2i+1) = m+i.
inline CoveringDesign skolem_sts(int n) {
    if (n < 7 || n % 6 != 1) throw invalid_parameter("skolem_sts: need n = 1 (mod 6), n >= 7");
    int m = (n - 1) / 6;
    int q = 2 * m;
    auto alpha = [&](int z) { return (z % 2 == 0) ? z / 2 : m + (z - 1) / 2; };
    auto op = [&](int x, int y) { return alpha((x + y) % q); };
    auto point = [&](int x, int col) { return col * q + x + 1; };
    int infinity = n;

    CoveringDesign d;
    d.n = n;
    d.k = 3;
    d.l = 2;
    for (int x = 0; x < m; ++x) d.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int i = 0; i < m; ++i) {
        d.blocks.push_back({infinity, point(m + i, 0), point(i, 1)});
        d.blocks.push_back({infinity, point(m + i, 1), point(i, 2)});
        d.blocks.push_back({infinity, point(m + i, 2), point(i, 0)});
    }
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int col = 0; col < 3; ++col)
                d.blocks.push_back({point(x, col), point(y, col), point(op(x, y), (col + 1) % 3)});

    detail::sort_blocks(d.blocks);
    d.exact = verify_cover(d).exact;
    return d;
}

} // namespace tokendom
