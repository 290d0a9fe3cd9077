#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hgd {

// Fixed-universe bit set over dense vertex indices. Every set operation
// is over the same universe size; mixing sizes is a programming error
// and asserted in debug builds.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) :
        n_(universe),
        blocks_((universe + 63) / 64, 0)
    {
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v)
            s.add(v);
        return s;
    }

    std::size_t universe() const { return n_; }

    void add(std::size_t v) { blocks_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void remove(std::size_t v) { blocks_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(std::size_t v) const { return (blocks_[v >> 6] >> (v & 63)) & 1; }

    bool empty() const
    {
        for (auto b : blocks_)
            if (b != 0)
                return false;
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto b : blocks_)
            c += static_cast<std::size_t>(__builtin_popcountll(b));
        return c;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] |= o.blocks_[i];
        return *this;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= o.blocks_[i];
        return *this;
    }

    // set difference
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= ~o.blocks_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet & b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { a -= b; return a; }

    bool intersects(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & o.blocks_[i])
                return true;
        return false;
    }

    bool contains(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (o.blocks_[i] & ~blocks_[i])
                return false;
        return true;
    }

    friend bool operator==(const VertexSet & a, const VertexSet & b)
    {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

    friend bool operator!=(const VertexSet & a, const VertexSet & b) { return ! (a == b); }

    // lexicographic on the sorted member list; used for canonical ordering
    friend bool operator<(const VertexSet & a, const VertexSet & b)
    {
        std::size_t i = a.first(), j = b.first();
        while (i != npos && j != npos) {
            if (i != j)
                return i < j;
            i = a.next(i);
            j = b.next(j);
        }
        return j != npos;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t first() const { return scan(0); }

    std::size_t next(std::size_t v) const { return scan(v + 1); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t v = first(); v != npos; v = next(v))
            f(v);
    }

    std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const
    {
        std::size_t h = n_;
        for (auto b : blocks_)
            h = h * 1099511628211ull + static_cast<std::size_t>(b);
        return h;
    }

private:
    std::size_t scan(std::size_t from) const
    {
        if (from >= n_)
            return npos;
        std::size_t block = from >> 6;
        std::uint64_t cur = blocks_[block] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur != 0)
                return (block << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
            if (++block >= blocks_.size())
                return npos;
            cur = blocks_[block];
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet & s) const { return s.hash(); }
};

} // namespace hgd
