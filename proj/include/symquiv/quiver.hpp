#pragma once

#include "symquiv/block_structure.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquiv {

/*
 * Type A quivers on the line 1 -- 2 -- ... -- n with a duality structure.
 *
 * Edge e (1 <= e <= n-1) joins vertices e and e+1; its arrow points Right
 * (e -> e+1) or Left (e+1 -> e). The vertex involution tau(v) = n+1-v acts on
 * arrows by reversal, sending the arrow on edge e to the arrow on edge n-e
 * with the SAME direction; a quiver is compatible with the duality exactly
 * when dir(e) == dir(n-e) for all e. The sign eps (+1 or -1) selects the
 * symmetric (orthogonal-type) or skew-symmetric (symplectic-type)
 * representation spaces.
 *
 * Edges split into: positive (e < n-e), negative (e > n-e), and, for even n,
 * the single self-paired edge e = n/2. For odd n there is instead a
 * self-paired vertex (n+1)/2, which is always a flow-through vertex.
 */
enum class ArrowDir { Left, Right };

class SymQuiverA {
public:
    // Validates: n >= 1, exactly n-1 directions, dir(e) == dir(n-e), eps = +-1.
    static SymQuiverA make(int n, std::vector<ArrowDir> dirs, int eps);

    int vertex_count() const { return n_; }
    int edge_count() const { return n_ - 1; }
    int eps() const { return eps_; }
    ArrowDir dir(int e) const { return dirs_[check_edge(e) - 1]; }

    int tau(int v) const { return n_ + 1 - v; }
    int tau_edge(int e) const { return n_ - check_edge(e); }

    // Head and tail of the arrow on edge e.
    int head(int e) const { return dir(e) == ArrowDir::Right ? e + 1 : e; }
    int tail(int e) const { return dir(e) == ArrowDir::Right ? e : e + 1; }

    bool is_positive_edge(int e) const { return check_edge(e) < n_ - e; }
    bool is_negative_edge(int e) const { return check_edge(e) > n_ - e; }
    bool is_fixed_edge(int e) const { return check_edge(e) == n_ - e; }
    std::optional<int> fixed_edge() const {
        if (n_ % 2 == 0 && n_ >= 2) return n_ / 2;
        return std::nullopt;
    }
    std::optional<int> fixed_vertex() const {
        if (n_ % 2 == 1) return (n_ + 1) / 2;
        return std::nullopt;
    }

    bool is_sink(int v) const;    // all incident arrows point into v
    bool is_source(int v) const;  // all incident arrows point out of v
    bool is_flow_through(int v) const { return !is_sink(v) && !is_source(v); }
    bool is_bipartite() const;    // every vertex is a sink or a source

    // Bipartite quivers in canonical labeling: odd vertices are sinks, even
    // vertices are sources (so dir alternates Left, Right, Left, ...).
    bool is_canonical_bipartite() const;

    friend bool operator==(const SymQuiverA& a, const SymQuiverA& b) {
        return a.n_ == b.n_ && a.eps_ == b.eps_ && a.dirs_ == b.dirs_;
    }

private:
    int check_edge(int e) const {
        if (e < 1 || e > n_ - 1) throw std::out_of_range("edge index out of range");
        return e;
    }

    int n_ = 1;
    int eps_ = 1;
    std::vector<ArrowDir> dirs_;
};

/*
 * Closed interval of vertices [lo, hi], 1-based. Intervals index the
 * indecomposable representations of a type A quiver; their multiplicities
 * classify orbits. Ordering is lexicographic on (lo, hi).
 */
struct Interval {
    int lo = 1;
    int hi = 1;

    int length() const { return hi - lo + 1; }
    bool contains(int v) const { return lo <= v && v <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
    friend bool operator<(const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    }

    std::string str() const { return std::to_string(lo) + "-" + std::to_string(hi); }
};

inline Interval tau(const Interval& j, int n) { return Interval{n + 1 - j.hi, n + 1 - j.lo}; }

inline int intersection_size(const Interval& a, const Interval& b) {
    const int lo = a.lo > b.lo ? a.lo : b.lo;
    const int hi = a.hi < b.hi ? a.hi : b.hi;
    return hi >= lo ? hi - lo + 1 : 0;
}

// All intervals of [1, n] in lexicographic order; n(n+1)/2 of them.
std::vector<Interval> all_intervals(int n);

// Every interval of the quiver paired with its mirror image; self-paired
// intervals appear with themselves.
std::vector<std::pair<Interval, Interval>> intervals_with_tau(const SymQuiverA& q);

// Position of an interval in the all_intervals(n) ordering.
int interval_index(const Interval& j, int n);

/*
 * Reduction of a duality-compatible quiver to canonical bipartite form.
 * Every flow-through vertex v is split into a head copy (receiving v's
 * incoming arrow) and a tail copy (emitting v's outgoing arrow), joined by a
 * new "contracted" arrow tail -> head that carries an isomorphism. After
 * splitting, labels are reversed if needed so vertex 1 is a sink.
 *
 * vertex_image[z] is the original vertex a bipartite vertex z came from, so
 * dimension vectors transport as d~(z) = d(vertex_image[z]). edge_image[e]
 * is the bipartite edge carrying original edge e's arrow. `contracted` lists
 * the new edges; a bipartite orbit corresponds to an orbit of the original
 * quiver exactly when every contracted arrow has full rank.
 */
struct BipartiteReduction {
    SymQuiverA original;
    SymQuiverA bipartite;
    std::vector<int> vertex_image;  // size n~+1, 1-based; [0] unused
    std::vector<int> edge_image;    // size n, 1-based over original edges; [0] unused
    std::vector<int> contracted;    // ascending bipartite edge indices

    bool trivial() const { return contracted.empty(); }

    std::vector<int> transport_dims(const std::vector<int>& original_dims) const;
};

BipartiteReduction bipartite_reduce(const SymQuiverA& q);

/*
 * Block structure of the square matrices associated to a canonical bipartite
 * quiver with dimension vector d: block p corresponds, for p <= n/2, to the
 * sink 2p-1 and, for p > n/2, to the source 2(n-p+1). By duality-symmetry of
 * d the same size sequence describes rows and columns.
 */
BlockStructure block_structure_for(const SymQuiverA& q, const std::vector<int>& dims);

// Vertex owning block p in the structure above (row side).
int block_vertex(const SymQuiverA& q, int p);

// Throws unless dims has size n, nonnegative entries, and d(v) == d(tau v).
void validate_dims(const SymQuiverA& q, const std::vector<int>& dims);

}  // namespace symquiv
