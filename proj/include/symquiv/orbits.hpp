#pragma once

#include "symquiv/quiver.hpp"
#include "symquiv/representation.hpp"

#include <vector>

namespace symquiv {

/*
 * Orbits of the symmetric representation spaces, described combinatorially.
 *
 * Every representation splits into interval indecomposables I_K with
 * multiplicities m_K; a point of the symmetric space forces m(tau K) = m(K),
 * and for eps = -1 additionally an even multiplicity on every self-paired
 * interval. The interval ranks of an orbit are linear in the multiplicities:
 *
 *     r_J = sum_K floor(|J intersect K| / 2) * m_K,
 *
 * and conversely the multiplicities are recovered from the ranks and the
 * dimension vector by solving that (square, invertible) linear system.
 */
struct Orbit {
    std::vector<int> mult;   // indexed like all_intervals(n) on the bipartite quiver
    std::vector<int> ranks;  // same indexing; singletons are 0
};

struct OrbitSpace {
    SymQuiverA original;
    std::vector<int> original_dims;
    BipartiteReduction reduction;
    std::vector<int> dims;        // transported to the bipartite quiver
    BlockStructure blocks;
    std::vector<Interval> intervals;  // all_intervals on the bipartite quiver
    std::vector<Orbit> orbits;        // lexicographic in the free multiplicities
    int dense_index = -1;             // orbit whose ranks dominate all others
};

// Enumerates every orbit of the symmetric representation space of q with the
// given dimension vector. Non-bipartite quivers are reduced first; their
// orbits are the bipartite orbits in which every contracted arrow has full
// rank. Throws if the space has no symmetric points at all.
OrbitSpace build_orbit_space(const SymQuiverA& q, const std::vector<int>& dims);

// Interval ranks of the orbit with the given multiplicities (closed formula,
// no matrices).
std::vector<int> ranks_from_multiplicities(int n, const std::vector<int>& mult);

// Inverts ranks_from_multiplicities given the dimension vector; throws if no
// valid multiplicity vector (integral, nonnegative, mirror-symmetric, even on
// self-paired intervals when eps = -1) produces these ranks.
std::vector<int> multiplicities_from_ranks(const SymQuiverA& q, const std::vector<int>& dims,
                                           const std::vector<int>& ranks);

/*
 * Canonical symmetric point with the given interval multiplicities on a
 * canonical bipartite quiver. The representation is assembled from atoms:
 * a self-paired interval contributes single one-dimensional summands for
 * eps = +1 and, for eps = -1, pairs of summands carrying the skew form
 * [[0, 1], [-1, 0]] on the self-paired edge; a mirror pair {K, tau K}
 * contributes the direct sum I_K + I_{tau K} with signs on the self-paired
 * edge chosen so the total matrix there is eps-symmetric. Mirrored arrows of
 * the result carry mutually transposed matrices.
 */
Representation representation_from_multiplicities(const SymQuiverA& q,
                                                  const std::vector<int>& mult);

// Representative of orbit `index` on the bipartite quiver of the space.
Representation orbit_representative(const OrbitSpace& space, int index);

}  // namespace symquiv
