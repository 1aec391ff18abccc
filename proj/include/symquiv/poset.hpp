#pragma once

#include "symquiv/orbits.hpp"
#include "symquiv/permutation.hpp"
#include "symquiv/zelevinsky.hpp"

#include <string>
#include <vector>

namespace symquiv {

/*
 * Degeneration order on the orbits of a space: O <= O' when O lies in the
 * closure of O', which happens exactly when every interval rank of O is at
 * most the corresponding rank of O'. `covers` lists the edges of the Hasse
 * diagram as (lower, upper) pairs.
 */
struct OrbitPoset {
    int count = 0;
    std::vector<std::vector<char>> leq;        // leq[i][j]: orbit i <= orbit j
    std::vector<std::pair<int, int>> covers;   // (lower, upper), lex sorted
    std::vector<int> maximal, minimal;         // orbit indices
};

OrbitPoset degeneration_poset(const OrbitSpace& space);

// Matrix-side order criterion: orbit i degenerates from orbit j exactly when
// the block rank table of i's square matrix is entrywise at most j's. This
// recomputes both tables from representatives; agreement with the interval
// rank criterion is one of the dictionary checks.
bool matrix_orbit_leq(const OrbitSpace& space, int i, int j);

// The same criterion on raw orbit representatives: m1 lies in the closure of
// m2's orbit exactly when every northwest rank of m1 at a pair of block cuts
// is at most the corresponding rank of m2. Inputs must be invertible square
// matrices of the block structure's total size, either both symmetric or both
// skew-symmetric; anything else throws.
bool matrix_orbit_leq(const IntMatrix& m1, const IntMatrix& m2, const BlockStructure& bs);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing
};

struct VerifyReport {
    int orbit_count = 0;
    std::vector<Permutation> veps;  // permutation attached to each orbit
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const VerifyCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/*
 * Machine verification of the orbit/permutation dictionary on one space:
 *
 *   unique-extremes          one dense orbit, one closed orbit
 *   injective                distinct orbits get distinct permutations
 *   order-reversing          degeneration order matches reversed Bruhat order
 *   image                    the permutations are exactly the predicted set
 *                            (downward-closed subset of it when the original
 *                            quiver needed contracted arrows)
 *   block-rank-fidelity      orbit representatives and their permutation
 *                            matrices (signed and unsigned) share block ranks
 *   interval-bounds          all permutations lie between the dense orbit's
 *                            and the zero orbit's in Bruhat order
 *   matrix-order-consistency the two order criteria agree on all pairs
 */
VerifyReport verify_dictionary(const OrbitSpace& space);

// Hasse diagram in Graphviz format, edges drawn upward from smaller orbits.
std::string to_dot(const OrbitSpace& space, const OrbitPoset& poset,
                   const std::vector<Permutation>& veps);

}  // namespace symquiv
