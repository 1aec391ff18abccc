#include "symquiv/representation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace symquiv {

Representation Representation::make(SymQuiverA q, std::vector<int> dims,
                                    std::vector<IntMatrix> edge_matrices) {
    validate_dims(q, dims);
    if (static_cast<int>(edge_matrices.size()) != q.edge_count())
        throw std::invalid_argument("expected one matrix per edge");
    for (int e = 1; e <= q.edge_count(); ++e) {
        const IntMatrix& m = edge_matrices[e - 1];
        if (m.rows() != dims[q.head(e) - 1] || m.cols() != dims[q.tail(e) - 1])
            throw std::invalid_argument("matrix on edge " + std::to_string(e) +
                                        " must have shape d(head) x d(tail)");
    }
    Representation rep;
    rep.quiver = std::move(q);
    rep.dims = std::move(dims);
    rep.edge_matrices = std::move(edge_matrices);
    return rep;
}

Representation zero_representation(const SymQuiverA& q, const std::vector<int>& dims) {
    validate_dims(q, dims);
    std::vector<IntMatrix> mats;
    mats.reserve(q.edge_count());
    for (int e = 1; e <= q.edge_count(); ++e)
        mats.emplace_back(dims[q.head(e) - 1], dims[q.tail(e) - 1]);
    return Representation::make(q, dims, std::move(mats));
}

IntMatrix omega_form(int eps, int dim) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    if (eps == -1 && dim % 2 != 0)
        throw std::invalid_argument("skew-symmetric form needs even dimension");
    IntMatrix m(dim, dim);
    for (int i = 1; i <= dim; ++i)
        m(i - 1, dim - i) = (eps == -1 && i > dim / 2) ? Int(-1) : Int(1);
    return m;
}

Representation symmetric_embed(const SymQuiverA& q, const std::vector<int>& dims,
                               const std::map<int, IntMatrix>& given) {
    validate_dims(q, dims);
    if (q.vertex_count() % 2 != 0)
        throw std::invalid_argument(
            "symmetric points need an even number of vertices; reduce quivers with a "
            "self-paired vertex to bipartite form first");
    std::vector<IntMatrix> mats(q.edge_count());
    std::vector<char> filled(q.edge_count() + 1, 0);
    for (const auto& [e, m] : given) {
        if (e < 1 || e > q.edge_count())
            throw std::invalid_argument("matrix given on nonexistent edge " + std::to_string(e));
        if (m.rows() != dims[q.head(e) - 1] || m.cols() != dims[q.tail(e) - 1])
            throw std::invalid_argument("matrix on edge " + std::to_string(e) +
                                        " must have shape d(head) x d(tail)");
        if (q.is_fixed_edge(e) && !is_eps_symmetric(m, q.eps()))
            throw std::invalid_argument(
                "matrix on the self-paired edge must equal eps times its transpose");
        mats[e - 1] = m;
        filled[e] = 1;
    }
    for (int e = 1; e <= q.edge_count(); ++e) {
        const int te = q.tau_edge(e);
        if (filled[e] && filled[te] && e != te)
            throw std::invalid_argument("edges " + std::to_string(e) + " and " +
                                        std::to_string(te) +
                                        " are mirror partners; give only one of them");
        if (!filled[e] && !filled[te])
            throw std::invalid_argument("no matrix given for edge " + std::to_string(e) +
                                        " or its mirror partner");
    }
    for (int e = 1; e <= q.edge_count(); ++e)
        if (!filled[e]) mats[e - 1] = mats[q.tau_edge(e) - 1].transposed();
    return Representation::make(q, dims, std::move(mats));
}

Representation lift_representation(const BipartiteReduction& red,
                                   const std::vector<int>& original_dims,
                                   const std::map<int, IntMatrix>& given) {
    validate_dims(red.original, original_dims);
    const SymQuiverA& qb = red.bipartite;
    const std::vector<int> dims = red.transport_dims(original_dims);
    std::map<int, IntMatrix> lifted;
    for (const auto& [e, m] : given) {
        if (e < 1 || e > red.original.edge_count())
            throw std::invalid_argument("matrix given on nonexistent edge " + std::to_string(e));
        lifted.emplace(red.edge_image[e], m);
    }
    for (int c : red.contracted) {
        const int tc = qb.tau_edge(c);
        const int d = dims[c - 1];  // both endpoints share the original vertex
        if (c == tc) {
            lifted.emplace(c, omega_form(qb.eps(), d));
        } else if (c < tc) {
            lifted.emplace(c, IntMatrix::identity(d));
        }
    }
    return symmetric_embed(qb, dims, lifted);
}

namespace {

struct StaircaseLayout {
    int half = 0;                 // number of sinks (and of sources)
    std::vector<int> row_cuts;    // prefix sums of sink dimensions, top to bottom
    std::vector<int> col_cuts;    // prefix sums of source dimensions, left to right

    static StaircaseLayout from(const Representation& rep) {
        if (!rep.quiver.is_canonical_bipartite())
            throw std::invalid_argument("staircase needs a canonical bipartite quiver");
        StaircaseLayout out;
        out.half = rep.quiver.vertex_count() / 2;
        out.row_cuts.assign(1, 0);
        out.col_cuts.assign(1, 0);
        for (int j = 0; j < out.half; ++j)
            out.row_cuts.push_back(out.row_cuts.back() + rep.dim(2 * j + 1));
        for (int i = out.half; i >= 1; --i)
            out.col_cuts.push_back(out.col_cuts.back() + rep.dim(2 * i));
        return out;
    }

    // 0-based block position of edge e's arrow inside the staircase.
    std::pair<int, int> edge_block(int e) const {
        if (e % 2 == 1) return {(e - 1) / 2, half - (e + 1) / 2};
        return {e / 2, half - e / 2};
    }
};

}  // namespace

IntMatrix quiver_staircase(const Representation& rep, bool with_sign) {
    const StaircaseLayout lay = StaircaseLayout::from(rep);
    const SymQuiverA& q = rep.quiver;
    IntMatrix m(lay.row_cuts.back(), lay.col_cuts.back());
    for (int e = 1; e <= q.edge_count(); ++e) {
        const auto [br, bc] = lay.edge_block(e);
        IntMatrix blk = rep.matrix(e);
        if (with_sign && q.is_negative_edge(e) && q.eps() == -1) blk = -blk;
        m.set_block(lay.row_cuts[br], lay.col_cuts[bc], blk);
    }
    return m;
}

IntMatrix zelevinsky_matrix(const Representation& rep, bool with_sign) {
    const IntMatrix stair = quiver_staircase(rep, with_sign);
    const int r = stair.rows(), c = stair.cols();
    IntMatrix m(r + c, c + r);
    m.set_block(0, 0, stair);
    for (int i = 0; i < r; ++i) m(i, c + i) = 1;
    const Int lower = with_sign ? Int(rep.quiver.eps()) : Int(1);
    for (int i = 0; i < c; ++i) m(r + i, i) = lower;
    return m;
}

namespace {

int interval_rank_of(const IntMatrix& stair, const StaircaseLayout& lay, int n, const Interval& j) {
    if (j.lo < 1 || j.hi > n) throw std::out_of_range("interval outside the vertex range");
    // Sinks 2k+1 in [lo, hi] give block rows, sources 2i in [lo, hi] block
    // columns; both ranges are contiguous.
    const int kmin = j.lo / 2;                  // smallest k with 2k+1 >= lo
    const int kmax = (j.hi - 1) / 2;            // largest k with 2k+1 <= hi
    const int imin = (j.lo + 1) / 2;            // smallest i with 2i >= lo
    const int imax = j.hi / 2;                  // largest i with 2i <= hi
    if (kmin > kmax || imin > imax) return 0;
    const int r0 = lay.row_cuts[kmin], r1 = lay.row_cuts[kmax + 1];
    const int c0 = lay.col_cuts[lay.half - imax], c1 = lay.col_cuts[lay.half - imin + 1];
    if (r1 == r0 || c1 == c0) return 0;
    return rank(stair.block(r0, c0, r1 - r0, c1 - c0));
}

}  // namespace

int interval_rank(const Representation& rep, const Interval& j) {
    const StaircaseLayout lay = StaircaseLayout::from(rep);
    return interval_rank_of(quiver_staircase(rep, false), lay, rep.quiver.vertex_count(), j);
}

std::vector<int> interval_rank_vector(const Representation& rep) {
    const StaircaseLayout lay = StaircaseLayout::from(rep);
    const IntMatrix stair = quiver_staircase(rep, false);
    const int n = rep.quiver.vertex_count();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (const Interval& j : all_intervals(n)) out.push_back(interval_rank_of(stair, lay, n, j));
    return out;
}

}  // namespace symquiv
