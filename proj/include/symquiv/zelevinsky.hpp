#pragma once

#include "symquiv/orbits.hpp"
#include "symquiv/permutation.hpp"
#include "symquiv/representation.hpp"

#include <vector>

namespace symquiv {

/*
 * The permutation attached to an orbit through its block rank table: the
 * number of 1s the permutation matrix must place in block (p, q) is the
 * second difference
 *
 *     N(p,q) = r(p,q) + r(p-1,q-1) - r(p-1,q) - r(p,q-1)
 *
 * of the block rank table r, and within each block, read in row-major order,
 * the 1s must pair the lowest free rows with the lowest free columns (any
 * other matching changes some northwest rank). Throws if the table is not a
 * valid block rank table for the structure.
 */
Permutation zelevinsky_permutation(const RankTable& block_ranks, const BlockStructure& bs);

// The same, computed from a representation on a canonical bipartite quiver.
Permutation zelevinsky_permutation(const Representation& rep);

// Signed variant: for eps = +1 this is zelevinsky_permutation; for eps = -1
// the fixed points are paired off blockwise, yielding a fixed-point-free
// involution.
Permutation sym_zelevinsky_permutation(const Representation& rep);

// Permutation of the zero representation: (d+1, ..., 2d, 1, ..., d). This is
// the Bruhat-maximal element attached to any orbit.
Permutation zero_orbit_permutation(int total_dim);

// Permutation attached to the dense (rank-dominant) orbit of the space: the
// Bruhat-minimal element among the orbit permutations.
Permutation dense_orbit_permutation(const OrbitSpace& space);

/*
 * The full set of permutations attached to orbits of the bipartite quiver of
 * the space, listed in lexicographic order. For eps = +1 these are the
 * involutions in the Bruhat interval from the dense orbit's permutation to
 * the zero orbit's that are minimal double-coset representatives; for
 * eps = -1 the interval is additionally intersected with the even-diagonal
 * condition and mapped through the fixed-point pairing. For a non-bipartite
 * original quiver this is a superset of the actual image (the image is the
 * Bruhat-downward-closed part cut out by the contracted-arrow conditions).
 */
std::vector<Permutation> bruhat_image_set(const OrbitSpace& space);

// Permutations attached to the orbits of the space, one per orbit in orbit
// order (not sorted, may repeat nothing — the dictionary is injective).
std::vector<Permutation> orbit_permutations(const OrbitSpace& space);

}  // namespace symquiv
