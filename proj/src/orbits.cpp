#include "symquiv/orbits.hpp"

#include "symquiv/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace symquiv {

std::vector<int> ranks_from_multiplicities(int n, const std::vector<int>& mult) {
    const std::vector<Interval> ivs = all_intervals(n);
    if (mult.size() != ivs.size())
        throw std::invalid_argument("multiplicity vector must list one entry per interval");
    std::vector<int> ranks(ivs.size(), 0);
    for (std::size_t j = 0; j < ivs.size(); ++j) {
        int r = 0;
        for (std::size_t k = 0; k < ivs.size(); ++k)
            r += intersection_size(ivs[j], ivs[k]) / 2 * mult[k];
        ranks[j] = r;
    }
    return ranks;
}

namespace {

void validate_multiplicities(const SymQuiverA& q, const std::vector<int>& mult) {
    const int n = q.vertex_count();
    const std::vector<Interval> ivs = all_intervals(n);
    if (mult.size() != ivs.size())
        throw std::invalid_argument("multiplicity vector must list one entry per interval");
    for (std::size_t k = 0; k < ivs.size(); ++k) {
        if (mult[k] < 0) throw std::domain_error("multiplicities must be nonnegative");
        const Interval tk = tau(ivs[k], n);
        if (mult[k] != mult[interval_index(tk, n)])
            throw std::domain_error("multiplicities must be mirror-symmetric");
        if (q.eps() == -1 && tk == ivs[k] && mult[k] % 2 != 0)
            throw std::domain_error(
                "self-paired intervals need even multiplicity when eps = -1");
    }
}

}  // namespace

std::vector<int> multiplicities_from_ranks(const SymQuiverA& q, const std::vector<int>& dims,
                                           const std::vector<int>& ranks) {
    validate_dims(q, dims);
    const int n = q.vertex_count();
    const std::vector<Interval> ivs = all_intervals(n);
    const int m = static_cast<int>(ivs.size());
    if (static_cast<int>(ranks.size()) != m)
        throw std::invalid_argument("rank vector must list one entry per interval");

    // Square system: one equation per interval of length >= 2 (its rank) and
    // one per vertex (its dimension).
    IntMatrix a(m, m);
    std::vector<Int> b(m);
    int row = 0;
    for (int j = 0; j < m; ++j) {
        if (ivs[j].length() < 2) continue;
        for (int k = 0; k < m; ++k) a(row, k) = intersection_size(ivs[j], ivs[k]) / 2;
        b[row] = ranks[j];
        ++row;
    }
    for (int v = 1; v <= n; ++v) {
        for (int k = 0; k < m; ++k) a(row, k) = ivs[k].contains(v) ? 1 : 0;
        b[row] = dims[v - 1];
        ++row;
    }

    const auto sol = solve_square(a, b);
    if (!sol) throw std::logic_error("internal error: rank/multiplicity system is singular");
    std::vector<int> mult(m);
    for (int k = 0; k < m; ++k) {
        const Rational& x = (*sol)[k];
        if (boost::multiprecision::denominator(x) != 1)
            throw std::domain_error("rank vector does not come from integral multiplicities");
        mult[k] = static_cast<int>(boost::multiprecision::numerator(x));
    }
    validate_multiplicities(q, mult);
    return mult;
}

namespace {

/*
 * Atom-by-atom assembly of the canonical symmetric point. Each atom owns one
 * or two basis slots at every vertex it covers; slots are dealt per vertex in
 * atom order. Within a pair atom the two summands are ordered by their
 * interval on the left half of the line and by the mirrored interval on the
 * right half, which makes mirrored arrow matrices transposes of each other
 * and concentrates all signs on the self-paired edge.
 */
struct Atom {
    enum class Kind { Single, Double, Pair };
    Kind kind;
    Interval k;        // defining interval (the lexicographically smaller one for pairs)
    Interval tk;       // mirror of k (equal to k for Single/Double)
};

struct SlotTable {
    // slot[v-1] maps (atom index, part) -> basis position at vertex v.
    // part: 0 = first summand, 1 = second (Double copies or the tau-part).
    std::vector<std::vector<std::pair<int, int>>> slots;  // per vertex: (atom, part) in order

    int find(int v, int atom, int part) const {
        const auto& at = slots[v - 1];
        for (std::size_t i = 0; i < at.size(); ++i)
            if (at[i].first == atom && at[i].second == part) return static_cast<int>(i);
        throw std::logic_error("internal error: atom has no slot at this vertex");
    }
};

}  // namespace

Representation representation_from_multiplicities(const SymQuiverA& q,
                                                  const std::vector<int>& mult) {
    if (!q.is_canonical_bipartite())
        throw std::invalid_argument("orbit representatives need a canonical bipartite quiver");
    validate_multiplicities(q, mult);
    const int n = q.vertex_count();
    const std::vector<Interval> ivs = all_intervals(n);

    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < ivs.size(); ++k) {
        const Interval tk = tau(ivs[k], n);
        if (tk < ivs[k]) continue;  // handled at the mirror representative
        if (tk == ivs[k]) {
            if (q.eps() == 1)
                for (int c = 0; c < mult[k]; ++c) atoms.push_back({Atom::Kind::Single, ivs[k], tk});
            else
                for (int c = 0; c < mult[k] / 2; ++c)
                    atoms.push_back({Atom::Kind::Double, ivs[k], tk});
        } else {
            for (int c = 0; c < mult[k]; ++c) atoms.push_back({Atom::Kind::Pair, ivs[k], tk});
        }
    }

    // Deal basis slots vertex by vertex, atoms in order. The two parts of a
    // pair atom appear in interval order on the left half of the line and in
    // mirrored-interval order on the right half.
    SlotTable table;
    table.slots.assign(n, {});
    std::vector<int> dims(n, 0);
    for (int v = 1; v <= n; ++v) {
        const bool left = v <= n / 2;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            const Atom& at = atoms[a];
            switch (at.kind) {
                case Atom::Kind::Single:
                    if (at.k.contains(v)) table.slots[v - 1].emplace_back(a, 0);
                    break;
                case Atom::Kind::Double:
                    if (at.k.contains(v)) {
                        table.slots[v - 1].emplace_back(a, 0);
                        table.slots[v - 1].emplace_back(a, 1);
                    }
                    break;
                case Atom::Kind::Pair: {
                    const bool in_k = at.k.contains(v);
                    const bool in_tk = at.tk.contains(v);
                    // Order parts by the interval visible from this side:
                    // k before tau k on the left, reversed on the right.
                    if (left) {
                        if (in_k) table.slots[v - 1].emplace_back(a, 0);
                        if (in_tk) table.slots[v - 1].emplace_back(a, 1);
                    } else {
                        if (in_tk) table.slots[v - 1].emplace_back(a, 1);
                        if (in_k) table.slots[v - 1].emplace_back(a, 0);
                    }
                    break;
                }
            }
        }
        dims[v - 1] = static_cast<int>(table.slots[v - 1].size());
    }

    std::vector<IntMatrix> mats;
    mats.reserve(q.edge_count());
    for (int e = 1; e <= q.edge_count(); ++e) {
        const int h = q.head(e), t = q.tail(e);
        IntMatrix m(dims[h - 1], dims[t - 1]);
        const bool fixed = q.is_fixed_edge(e);
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            const Atom& at = atoms[a];
            const Interval span{e, e + 1};
            switch (at.kind) {
                case Atom::Kind::Single:
                    if (intersection_size(at.k, span) == 2)
                        m(table.find(h, a, 0), table.find(t, a, 0)) = 1;
                    break;
                case Atom::Kind::Double:
                    if (intersection_size(at.k, span) == 2) {
                        if (fixed) {
                            m(table.find(h, a, 0), table.find(t, a, 1)) = 1;
                            m(table.find(h, a, 1), table.find(t, a, 0)) = -1;
                        } else {
                            m(table.find(h, a, 0), table.find(t, a, 0)) = 1;
                            m(table.find(h, a, 1), table.find(t, a, 1)) = 1;
                        }
                    }
                    break;
                case Atom::Kind::Pair:
                    for (int part = 0; part < 2; ++part) {
                        const Interval& kk = part == 0 ? at.k : at.tk;
                        if (intersection_size(kk, span) != 2) continue;
                        const int ri = table.find(h, a, part);
                        const int ci = table.find(t, a, part);
                        Int val(1);
                        if (fixed && q.eps() == -1 && ri >= ci) val = -1;
                        m(ri, ci) = val;
                    }
                    break;
            }
        }
        mats.push_back(std::move(m));
    }
    return Representation::make(q, dims, std::move(mats));
}

namespace {

struct OrbitEnumerator {
    const SymQuiverA& q;
    const std::vector<int>& dims;
    const std::vector<Interval>& ivs;
    const std::vector<int>& contracted;  // bipartite edges that must have full rank
    int n;
    std::vector<std::size_t> free_idx;   // multi-vertex mirror representatives, lex order
    std::vector<int> mult;
    std::vector<int> remaining;          // capacity left at each vertex
    std::vector<Orbit>& out;

    OrbitEnumerator(const SymQuiverA& q_, const std::vector<int>& dims_,
                    const std::vector<Interval>& ivs_, const std::vector<int>& contracted_,
                    std::vector<Orbit>& out_)
        : q(q_), dims(dims_), ivs(ivs_), contracted(contracted_), n(q_.vertex_count()),
          mult(ivs_.size(), 0), remaining(dims_), out(out_) {
        for (std::size_t k = 0; k < ivs.size(); ++k)
            if (ivs[k].length() >= 2 && !(tau(ivs[k], n) < ivs[k])) free_idx.push_back(k);
    }

    void apply(const Interval& k, int delta) {
        for (int v = k.lo; v <= k.hi; ++v) remaining[v - 1] += delta;
    }

    int capacity(const Interval& k) const {
        int c = remaining[k.lo - 1];
        for (int v = k.lo + 1; v <= k.hi; ++v) c = std::min(c, remaining[v - 1]);
        return c;
    }

    void finish() {
        // Singleton multiplicities soak up the remaining dimension at each
        // vertex; by mirror symmetry of everything assigned so far they are
        // automatically mirror-symmetric.
        for (int v = 1; v <= n; ++v) mult[interval_index(Interval{v, v}, n)] = remaining[v - 1];
        for (int c : contracted) {
            // Original-quiver orbits need the contracted arrow isomorphic:
            // the intervals through both its endpoints must exhaust its
            // dimension.
            int through = 0;
            for (std::size_t k = 0; k < ivs.size(); ++k)
                if (ivs[k].contains(c) && ivs[k].contains(c + 1)) through += mult[k];
            if (through != dims[c - 1]) return;
        }
        Orbit o;
        o.mult = mult;
        o.ranks = ranks_from_multiplicities(n, mult);
        out.push_back(std::move(o));
    }

    void search(std::size_t pos) {
        if (pos == free_idx.size()) {
            finish();
            return;
        }
        const std::size_t k = free_idx[pos];
        const Interval kk = ivs[k];
        const Interval tk = tau(kk, n);
        const bool self_paired = tk == kk;
        const int step = (self_paired && q.eps() == -1) ? 2 : 1;
        int cap = capacity(kk);
        if (!self_paired) cap = std::min(cap, capacity(tk));
        // Overlapping mirror pairs consume two units per overlapped vertex.
        if (!self_paired && intersection_size(kk, tk) > 0) {
            const Interval ov{std::max(kk.lo, tk.lo), std::min(kk.hi, tk.hi)};
            cap = std::min(cap, capacity(ov) / 2);
        }
        for (int m = 0; m <= cap; m += step) {
            mult[k] = m;
            apply(kk, -m);
            if (!self_paired) {
                mult[interval_index(tk, n)] = m;
                apply(tk, -m);
            }
            search(pos + 1);
            apply(kk, m);
            if (!self_paired) {
                mult[interval_index(tk, n)] = 0;
                apply(tk, m);
            }
            mult[k] = 0;
        }
    }
};

}  // namespace

OrbitSpace build_orbit_space(const SymQuiverA& q, const std::vector<int>& dims) {
    validate_dims(q, dims);
    OrbitSpace space;
    space.original = q;
    space.original_dims = dims;
    space.reduction = bipartite_reduce(q);
    if (space.reduction.bipartite.vertex_count() < 2)
        throw std::invalid_argument("orbit enumeration needs a quiver with at least one edge");
    space.dims = space.reduction.transport_dims(dims);
    space.blocks = block_structure_for(space.reduction.bipartite, space.dims);
    space.intervals = all_intervals(space.reduction.bipartite.vertex_count());

    OrbitEnumerator en(space.reduction.bipartite, space.dims, space.intervals,
                       space.reduction.contracted, space.orbits);
    en.search(0);
    if (space.orbits.empty())
        throw std::domain_error("the symmetric representation space has no points "
                                "for this dimension vector");

    for (std::size_t i = 0; i < space.orbits.size(); ++i) {
        bool dominates_all = true;
        for (const Orbit& other : space.orbits) {
            for (std::size_t k = 0; k < other.ranks.size(); ++k)
                if (space.orbits[i].ranks[k] < other.ranks[k]) {
                    dominates_all = false;
                    break;
                }
            if (!dominates_all) break;
        }
        if (dominates_all) {
            space.dense_index = static_cast<int>(i);
            break;
        }
    }
    if (space.dense_index < 0)
        throw std::logic_error("internal error: no orbit dominates all others");
    return space;
}

Representation orbit_representative(const OrbitSpace& space, int index) {
    if (index < 0 || index >= static_cast<int>(space.orbits.size()))
        throw std::out_of_range("orbit index out of range");
    return representation_from_multiplicities(space.reduction.bipartite,
                                              space.orbits[index].mult);
}

}  // namespace symquiv
