#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace spexlab {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline constexpr int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-capacity set of vertex indices backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity) : capacity_(capacity), words_(words_for(capacity), 0) {}

    VertexSet(int capacity, std::span<const Word> words)
        : capacity_(capacity), words_(words.begin(), words.end())
    {
    }

    static VertexSet full(int capacity)
    {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v)
            s.insert(v);
        return s;
    }

    int capacity() const noexcept { return capacity_; }

    bool contains(int v) const noexcept { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void insert(int v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(int v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    int count() const noexcept
    {
        int c = 0;
        for (Word w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    /// Smallest member, or -1 when empty.
    int first() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
        return -1;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(std::span<const Word> o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

    bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                f(static_cast<int>(i) * kWordBits + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::span<const Word> words() const noexcept { return words_; }

private:
    int capacity_ = 0;
    std::vector<Word> words_;
};

inline int popcount_and(std::span<const Word> a, std::span<const Word> b) noexcept
{
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

} // namespace spexlab
