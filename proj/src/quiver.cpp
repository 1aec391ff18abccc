#include "symquiv/quiver.hpp"

#include <utility>

namespace symquiv {

SymQuiverA SymQuiverA::make(int n, std::vector<ArrowDir> dirs, int eps) {
    if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
    if (static_cast<int>(dirs.size()) != n - 1)
        throw std::invalid_argument("expected exactly n-1 arrow directions");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    for (int e = 1; e <= n - 1; ++e) {
        if (dirs[e - 1] != dirs[n - e - 1])
            throw std::invalid_argument(
                "arrow directions must be mirror-symmetric: edges " + std::to_string(e) + " and " +
                std::to_string(n - e) + " must share a direction");
    }
    SymQuiverA q;
    q.n_ = n;
    q.eps_ = eps;
    q.dirs_ = std::move(dirs);
    return q;
}

bool SymQuiverA::is_sink(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
    if (v > 1 && head(v - 1) != v) return false;
    if (v < n_ && head(v) != v) return false;
    return true;
}

bool SymQuiverA::is_source(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
    if (v > 1 && tail(v - 1) != v) return false;
    if (v < n_ && tail(v) != v) return false;
    return true;
}

bool SymQuiverA::is_bipartite() const {
    for (int v = 1; v <= n_; ++v)
        if (is_flow_through(v)) return false;
    return true;
}

bool SymQuiverA::is_canonical_bipartite() const {
    if (n_ % 2 != 0) return false;
    for (int e = 1; e <= n_ - 1; ++e)
        if (dir(e) != (e % 2 == 1 ? ArrowDir::Left : ArrowDir::Right)) return false;
    return true;
}

std::vector<Interval> all_intervals(int n) {
    std::vector<Interval> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi) out.push_back(Interval{lo, hi});
    return out;
}

std::vector<std::pair<Interval, Interval>> intervals_with_tau(const SymQuiverA& q) {
    const int n = q.vertex_count();
    std::vector<std::pair<Interval, Interval>> out;
    for (const Interval& j : all_intervals(n)) out.emplace_back(j, tau(j, n));
    return out;
}

int interval_index(const Interval& j, int n) {
    if (j.lo < 1 || j.hi > n || j.lo > j.hi) throw std::out_of_range("interval outside [1, n]");
    // Intervals starting at lo' < lo contribute n - lo' + 1 each.
    return (j.lo - 1) * n - (j.lo - 1) * (j.lo - 2) / 2 + (j.hi - j.lo);
}

std::vector<int> BipartiteReduction::transport_dims(const std::vector<int>& original_dims) const {
    validate_dims(original, original_dims);
    const int nb = bipartite.vertex_count();
    std::vector<int> out(nb);
    for (int z = 1; z <= nb; ++z) out[z - 1] = original_dims[vertex_image[z] - 1];
    return out;
}

BipartiteReduction bipartite_reduce(const SymQuiverA& q) {
    const int n = q.vertex_count();

    // Pass 1: split flow-through vertices along the line. Position lists are
    // built left to right; a flow-through vertex contributes two positions
    // (head copy adjacent to its incoming arrow, tail copy to its outgoing
    // one) joined by a contracted arrow tail -> head.
    std::vector<int> vimg{0};           // new position -> original vertex
    std::vector<ArrowDir> dirs;         // new edge directions
    std::vector<int> eimg(n, 0);        // original edge -> new edge
    std::vector<char> is_contracted{0};  // per new edge, 1-based alongside dirs

    auto push_edge = [&](ArrowDir d, bool contracted) {
        dirs.push_back(d);
        is_contracted.push_back(contracted ? 1 : 0);
    };

    for (int v = 1; v <= n; ++v) {
        if (!q.is_flow_through(v)) {
            vimg.push_back(v);
        } else if (q.head(v - 1) == v) {
            // Flow left-to-right: (v-1) -> v -> (v+1). Head copy sits next to
            // v-1, tail copy next to v+1; contracted arrow points Left.
            vimg.push_back(v);
            vimg.push_back(v);
            push_edge(ArrowDir::Left, true);
        } else {
            // Flow right-to-left: (v+1) -> v -> (v-1). Tail copy first, then
            // head copy; contracted arrow points Right.
            vimg.push_back(v);
            vimg.push_back(v);
            push_edge(ArrowDir::Right, true);
        }
        if (v < n) {
            push_edge(q.dir(v), false);
            eimg[v] = static_cast<int>(dirs.size());
        }
    }

    int nb = static_cast<int>(vimg.size()) - 1;

    // Pass 2: canonicalize so vertex 1 is a sink (reverse labels if needed).
    bool reversed = nb >= 2 && dirs[0] == ArrowDir::Right;
    BipartiteReduction red;
    red.original = q;
    if (!reversed) {
        red.bipartite = SymQuiverA::make(nb, dirs, q.eps());
        red.vertex_image = vimg;
        red.edge_image = eimg;
        for (int e = 1; e <= nb - 1; ++e)
            if (is_contracted[e]) red.contracted.push_back(e);
    } else {
        std::vector<ArrowDir> rdirs(nb - 1, ArrowDir::Left);
        std::vector<char> rcontr(nb, 0);
        for (int e = 1; e <= nb - 1; ++e) {
            // Edge e joins positions (e, e+1); after the reversal z -> nb+1-z
            // it becomes edge nb-e with the arrow flipped.
            rdirs[nb - e - 1] = dirs[e - 1] == ArrowDir::Left ? ArrowDir::Right : ArrowDir::Left;
            rcontr[nb - e] = is_contracted[e];
        }
        red.bipartite = SymQuiverA::make(nb, std::move(rdirs), q.eps());
        red.vertex_image.assign(nb + 1, 0);
        for (int z = 1; z <= nb; ++z) red.vertex_image[z] = vimg[nb + 1 - z];
        red.edge_image.assign(n, 0);
        for (int e = 1; e <= n - 1; ++e) red.edge_image[e] = nb - eimg[e];
        for (int e = 1; e <= nb - 1; ++e)
            if (rcontr[e]) red.contracted.push_back(e);
    }

    if (nb >= 2 && !red.bipartite.is_canonical_bipartite())
        throw std::logic_error("internal error: reduction did not reach canonical bipartite form");
    return red;
}

BlockStructure block_structure_for(const SymQuiverA& q, const std::vector<int>& dims) {
    if (!q.is_canonical_bipartite())
        throw std::invalid_argument("block structure requires a canonical bipartite quiver");
    validate_dims(q, dims);
    const int half = q.vertex_count() / 2;
    std::vector<int> sizes;
    sizes.reserve(q.vertex_count());
    for (int j = 0; j < half; ++j) sizes.push_back(dims[2 * j]);               // sinks 1, 3, ...
    for (int i = half; i >= 1; --i) sizes.push_back(dims[2 * i - 1]);          // sources n, n-2, ...
    return BlockStructure::from_sizes(std::move(sizes));
}

int block_vertex(const SymQuiverA& q, int p) {
    const int half = q.vertex_count() / 2;
    if (p < 1 || p > q.vertex_count()) throw std::out_of_range("block index out of range");
    return p <= half ? 2 * p - 1 : 2 * (q.vertex_count() - p + 1);
}

void validate_dims(const SymQuiverA& q, const std::vector<int>& dims) {
    const int n = q.vertex_count();
    if (static_cast<int>(dims.size()) != n)
        throw std::invalid_argument("dimension vector must list one entry per vertex");
    for (int v = 1; v <= n; ++v) {
        if (dims[v - 1] < 0) throw std::invalid_argument("dimensions must be nonnegative");
        if (dims[v - 1] != dims[q.tau(v) - 1])
            throw std::invalid_argument("dimension vector must be mirror-symmetric: d(v) == d(n+1-v)");
    }
}

}  // namespace symquiv
