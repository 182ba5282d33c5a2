#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace nsurf {

/// Disjoint sets with a parity bit per element relative to its root. Plain
/// connectivity ignores the parity; oriented identifications use it to detect
/// an element glued back onto itself with a flip.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), parity_(n, false), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t size() const noexcept { return parent_.size(); }

    std::size_t find(std::size_t x)
    {
        bool p = false;
        return find(x, p);
    }

    /// Root of x; `parity` receives x's parity relative to that root.
    std::size_t find(std::size_t x, bool& parity)
    {
        bool acc = false;
        std::size_t r = x;
        while (parent_[r] != r) {
            acc ^= parity_[r];
            r = parent_[r];
        }
        // path compression, keeping parities relative to the root
        bool rem = acc;
        while (parent_[x] != r) {
            const std::size_t next = parent_[x];
            const bool px = parity_[x];
            parent_[x] = r;
            parity_[x] = rem;
            rem ^= px;
            x = next;
        }
        parity = acc;
        return r;
    }

    /// Joins a and b with the relation parity(a) ^ parity(b) == flip.
    /// Returns false if the sets were already joined with the opposite relation.
    bool unite(std::size_t a, std::size_t b, bool flip = false)
    {
        bool pa = false;
        bool pb = false;
        std::size_t ra = find(a, pa);
        std::size_t rb = find(b, pb);
        if (ra == rb)
            return (pa ^ pb) == flip;
        if (rank_[ra] < rank_[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ flip;
        if (rank_[ra] == rank_[rb])
            ++rank_[ra];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<bool> parity_;
    std::vector<unsigned> rank_;
};

} // namespace nsurf
