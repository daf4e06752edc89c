#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace acp
{
    /// Fixed-width dynamic bitset used for adjacency rows.
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(std::size_t size) : _size(size), _words((size + 63) / 64, 0) {}

        auto size() const -> std::size_t { return _size; }

        auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1u; }
        auto set(std::size_t i) -> void { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
        auto reset(std::size_t i) -> void { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

        auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : _words)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        auto none() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        /// True iff every bit of *this is also set in other.
        auto is_subset_of(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        /// Number of bits set in *this but not in other.
        auto count_difference(const Bitset & other) const -> std::size_t
        {
            std::size_t c = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                c += static_cast<std::size_t>(std::popcount(_words[i] & ~other._words[i]));
            return c;
        }

        auto operator==(const Bitset &) const -> bool = default;

        auto hash() const -> std::size_t
        {
            std::size_t h = _size;
            for (auto w : _words)
                h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }

    private:
        std::size_t _size = 0;
        std::vector<std::uint64_t> _words;
    };

    struct BitsetHash
    {
        auto operator()(const Bitset & b) const -> std::size_t { return b.hash(); }
    };
}
