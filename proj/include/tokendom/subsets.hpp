#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tokendom/errors.hpp"

namespace tokendom {

/// A subset of a ground set of at most 64 elements, one bit per element.
/// Bit i corresponds to the vertex with index i in the owning graph.
using Mask = std::uint64_t;

inline constexpr int max_ground_size = 64;

/// C(n, k) as an exact 64-bit value. Everything representable on a 64-element
/// ground set fits; intermediates go through 128 bits.
inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r is C(n-k+i, i) after each step
    }
    return static_cast<std::uint64_t>(r);
}

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_positions(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_from_positions(const std::vector<int>& positions) {
    Mask m = 0;
    for (int p : positions) {
        if (p < 0 || p >= max_ground_size)
            throw invalid_parameter("subset position " + std::to_string(p) + " outside [0,64)");
        m |= Mask{1} << p;
    }
    return m;
}

/// Colex rank of a k-subset among all k-subsets of the ground set.
/// For positions c_0 < c_1 < ... the rank is sum C(c_i, i+1); numeric order
/// on masks coincides with colex order on subsets.
inline std::uint64_t colex_rank(Mask subset) {
    std::uint64_t r = 0;
    unsigned i = 1;
    while (subset != 0) {
        r += binomial(static_cast<unsigned>(std::countr_zero(subset)), i++);
        subset &= subset - 1;
    }
    return r;
}

/// Inverse of colex_rank for k-subsets of an n-element ground set.
inline Mask colex_unrank(std::uint64_t rank, int n, int k) {
    if (n < 0 || n > max_ground_size || k < 0 || k > n)
        throw invalid_parameter("colex_unrank: need 0 <= k <= n <= 64");
    if (rank >= binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))
        throw invalid_parameter("colex_unrank: rank " + std::to_string(rank) + " out of range for C(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    Mask m = 0;
    int hi = n - 1;
    for (int i = k; i >= 1; --i) {
        while (binomial(static_cast<unsigned>(hi), static_cast<unsigned>(i)) > rank) --hi;
        m |= Mask{1} << hi;
        rank -= binomial(static_cast<unsigned>(hi), static_cast<unsigned>(i));
        --hi;
    }
    return m;
}

/// Next k-subset mask in colex (numeric) order; Gosper's hack.
inline Mask next_subset_same_size(Mask m) {
    Mask c = m & -m;
    Mask r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

/// Visit all C(n,k) k-subset masks of [0,n) in colex order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (n < 0 || n > max_ground_size || k < 0 || k > n)
        throw invalid_parameter("for_each_subset: need 0 <= k <= n <= 64");
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    std::uint64_t count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    Mask m = (k == 64) ? ~Mask{0} : (Mask{1} << k) - 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        fn(m);
        if (i + 1 < count) m = next_subset_same_size(m);
    }
}

/// Multiples of i in {1,...,n}.
inline std::vector<int> multiples_in(int n, int i) {
    if (n < 0 || i < 1) throw invalid_parameter("multiples_in: need n >= 0, i >= 1");
    std::vector<int> out;
    for (int j = i; j <= n; j += i) out.push_back(j);
    return out;
}

/// Elements of {1,...,n} congruent to i mod p.
inline std::vector<int> residue_class(int n, int i, int p) {
    if (n < 0 || p < 1 || i < 0 || i >= p) throw invalid_parameter("residue_class: need 0 <= i < p, n >= 0");
    std::vector<int> out;
    for (int x = 1; x <= n; ++x)
        if (x % p == i) out.push_back(x);
    return out;
}

} // namespace tokendom
