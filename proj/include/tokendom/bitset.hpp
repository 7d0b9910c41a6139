#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tokendom {

/// Fixed-size bit vector sized at construction; just enough operations for
/// the set-cover search (no bounds checks on the hot path).
class Bitset {
public:
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t size() const { return bits_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    void operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    /// |this \ o|
    std::size_t count_andnot(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
        return c;
    }

private:
    std::size_t bits_;
    std::vector<std::uint64_t> words_;
};

} // namespace tokendom
