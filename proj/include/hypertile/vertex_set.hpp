#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hypertile {

/// Upper bound on the vertex count of any hypergraph handled by the toolkit.
inline constexpr int kMaxVertices = 128;

/// Fixed-width bitset over vertices 0..kMaxVertices-1.
class VertexSet
{
public:
    static constexpr int kWords = (kMaxVertices + 63) / 64;

    constexpr VertexSet() = default;

    static VertexSet range(int n)
    {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            s.insert(v);
        return s;
    }

    template <typename Range>
    static VertexSet of(const Range &vertices)
    {
        VertexSet s;
        for (int v : vertices)
            s.insert(v);
        return s;
    }

    static VertexSet of(std::initializer_list<int> vertices)
    {
        VertexSet s;
        for (int v : vertices)
            s.insert(v);
        return s;
    }

    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] int first() const
    {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] != 0)
                return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    [[nodiscard]] int next(int v) const
    {
        ++v;
        if (v >= kMaxVertices)
            return -1;
        int i = v >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (w != 0)
                return i * 64 + std::countr_zero(w);
            if (++i >= kWords)
                return -1;
            w = words_[i];
        }
    }

    template <typename F>
    void for_each(F &&f) const
    {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    [[nodiscard]] bool intersects(const VertexSet &o) const
    {
        for (int i = 0; i < kWords; ++i)
            if ((words_[i] & o.words_[i]) != 0)
                return true;
        return false;
    }

    [[nodiscard]] bool is_subset_of(const VertexSet &o) const
    {
        for (int i = 0; i < kWords; ++i)
            if ((words_[i] & ~o.words_[i]) != 0)
                return false;
        return true;
    }

    VertexSet &operator&=(const VertexSet &o)
    {
        for (int i = 0; i < kWords; ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet &operator|=(const VertexSet &o)
    {
        for (int i = 0; i < kWords; ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet &operator-=(const VertexSet &o)
    {
        for (int i = 0; i < kWords; ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    [[nodiscard]] std::size_t hash() const
    {
        std::size_t h = 0;
        for (auto w : words_)
            h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h << 6) + (h >> 2));
        return h;
    }

    [[nodiscard]] const std::array<std::uint64_t, kWords> &words() const { return words_; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash
{
    std::size_t operator()(const VertexSet &s) const { return s.hash(); }
};

} // namespace hypertile
