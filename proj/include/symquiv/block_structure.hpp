#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquiv {

/*
 * A composition of a total dimension into consecutive blocks, shared by the
 * matrix side (sampling northwest rank tables at block corners) and the
 * permutation side (minimal double-coset representatives, diagonal-block
 * conditions). Blocks and entries are 1-based: block p spans rows/columns
 * cut(p-1)+1 .. cut(p).
 */
struct BlockStructure {
    std::vector<int> sizes;  // block sizes, left to right / top to bottom
    std::vector<int> cuts;   // cuts[p] = sizes[0] + ... + sizes[p-1]; cuts[0] = 0

    static BlockStructure from_sizes(std::vector<int> sizes) {
        BlockStructure bs;
        bs.cuts.assign(1, 0);
        for (int s : sizes) {
            if (s < 0) throw std::invalid_argument("block sizes must be nonnegative");
            bs.cuts.push_back(bs.cuts.back() + s);
        }
        bs.sizes = std::move(sizes);
        return bs;
    }

    int block_count() const { return static_cast<int>(sizes.size()); }
    int total() const { return cuts.back(); }
    int cut(int p) const { return cuts[p]; }

    // Block containing 1-based index i.
    int block_of(int i) const {
        if (i < 1 || i > total()) throw std::out_of_range("index outside block structure");
        int p = 1;
        while (cuts[p] < i) ++p;
        return p;
    }
};

}  // namespace symquiv
