#include "symquiv/zelevinsky.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symquiv {

Permutation zelevinsky_permutation(const RankTable& block_ranks, const BlockStructure& bs) {
    const int nb = bs.block_count();
    if (block_ranks.rows() != nb || block_ranks.cols() != nb)
        throw std::invalid_argument("block rank table shape must match the block structure");
    const int total = bs.total();

    std::vector<int> w(total + 1, 0);
    std::vector<char> row_used(total + 1, 0), col_used(total + 1, 0);
    for (int p = 1; p <= nb; ++p) {
        for (int q = 1; q <= nb; ++q) {
            const int count = block_ranks.entry(p, q) + block_ranks.entry(p - 1, q - 1) -
                              block_ranks.entry(p - 1, q) - block_ranks.entry(p, q - 1);
            if (count < 0)
                throw std::invalid_argument("block rank table is not monotone (negative block count)");
            // Match the `count` lowest free rows of block row p with the
            // `count` lowest free columns of block column q.
            int placed = 0;
            int col = bs.cut(q - 1) + 1;
            for (int row = bs.cut(p - 1) + 1; row <= bs.cut(p) && placed < count; ++row) {
                if (row_used[row]) continue;
                while (col <= bs.cut(q) && col_used[col]) ++col;
                if (col > bs.cut(q)) break;
                w[row] = col;
                row_used[row] = 1;
                col_used[col] = 1;
                ++placed;
            }
            if (placed != count)
                throw std::invalid_argument("block rank table overfills block " +
                                            std::to_string(p) + "," + std::to_string(q));
        }
    }
    for (int row = 1; row <= total; ++row)
        if (!row_used[row])
            throw std::invalid_argument("block rank table does not fill all rows");
    return Permutation(std::vector<int>(w.begin() + 1, w.end()));
}

Permutation zelevinsky_permutation(const Representation& rep) {
    const BlockStructure bs = block_structure_for(rep.quiver, rep.dims);
    const RankTable table =
        block_rank_table(zelevinsky_matrix(rep, false), bs.cuts, bs.cuts);
    return zelevinsky_permutation(table, bs);
}

Permutation sym_zelevinsky_permutation(const Representation& rep) {
    const Permutation v = zelevinsky_permutation(rep);
    if (rep.quiver.eps() == 1) return v;
    return pair_fixed_points(v, block_structure_for(rep.quiver, rep.dims));
}

Permutation dense_orbit_permutation(const OrbitSpace& space) {
    return sym_zelevinsky_permutation(orbit_representative(space, space.dense_index));
}

Permutation zero_orbit_permutation(int total_dim) {
    if (total_dim % 2 != 0)
        throw std::invalid_argument("total dimension of a symmetric space is even");
    const int d = total_dim / 2;
    std::vector<int> w(total_dim);
    for (int i = 1; i <= d; ++i) {
        w[i - 1] = d + i;
        w[d + i - 1] = i;
    }
    return Permutation(std::move(w));
}

std::vector<Permutation> orbit_permutations(const OrbitSpace& space) {
    std::vector<Permutation> out;
    out.reserve(space.orbits.size());
    for (std::size_t i = 0; i < space.orbits.size(); ++i)
        out.push_back(sym_zelevinsky_permutation(orbit_representative(space, static_cast<int>(i))));
    return out;
}

std::vector<Permutation> bruhat_image_set(const OrbitSpace& space) {
    // The interval endpoints belong to the unconstrained bipartite space.
    const Permutation lo = [&] {
        if (space.reduction.trivial())
            return zelevinsky_permutation(orbit_representative(space, space.dense_index));
        const OrbitSpace full = build_orbit_space(space.reduction.bipartite, space.dims);
        return zelevinsky_permutation(orbit_representative(full, full.dense_index));
    }();
    const Permutation hi = zero_orbit_permutation(space.blocks.total());

    InvolutionFilter filter;
    filter.bruhat_lo = lo;
    filter.bruhat_hi = hi;
    std::vector<Permutation> out;
    for (const Permutation& u : involutions(space.blocks.total(), filter)) {
        if (!is_min_double_coset_rep(u, space.blocks)) continue;
        if (space.reduction.bipartite.eps() == 1) {
            out.push_back(u);
        } else {
            if (!has_even_diagonal_blocks(u, space.blocks)) continue;
            out.push_back(pair_fixed_points(u, space.blocks));
        }
    }
    // The fixed-point pairing is injective on coset-minimal involutions with
    // even diagonal blocks (their diagonal blocks carry no off-diagonal 1s),
    // so no dedup is needed here.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symquiv
