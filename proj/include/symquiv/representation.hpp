#pragma once

#include "symquiv/exact_linalg.hpp"
#include "symquiv/matrix.hpp"
#include "symquiv/quiver.hpp"

#include <map>
#include <vector>

namespace symquiv {

/*
 * A representation assigns to each arrow e a d(head) x d(tail) integer
 * matrix. Points of the symmetric (eps = +1) or skew-symmetric (eps = -1)
 * space additionally satisfy: the matrix on the self-paired edge equals eps
 * times its transpose, and mirrored arrows carry mutually transposed
 * matrices.
 */
struct Representation {
    SymQuiverA quiver;
    std::vector<int> dims;                  // dims[v-1]
    std::vector<IntMatrix> edge_matrices;   // edge_matrices[e-1]: d(head(e)) x d(tail(e))

    static Representation make(SymQuiverA q, std::vector<int> dims,
                               std::vector<IntMatrix> edge_matrices);

    const IntMatrix& matrix(int e) const { return edge_matrices[e - 1]; }
    int dim(int v) const { return dims[v - 1]; }
};

// Zero representation of the given quiver.
Representation zero_representation(const SymQuiverA& q, const std::vector<int>& dims);

/*
 * Nondegenerate form matrix placed on a self-paired summand: for eps = +1
 * the antidiagonal symmetric form, for eps = -1 the antidiagonal
 * skew-symmetric form (which needs even dimension). Both are their own
 * transposed inverses up to sign, and both are signed permutation matrices,
 * so they never disturb rank computations.
 */
IntMatrix omega_form(int eps, int dim);

/*
 * Completes matrices given on one edge per mirror-orbit (for instance all
 * positive edges plus the self-paired edge) to a full symmetric point: the
 * partner of each given edge receives the transposed matrix, and the
 * self-paired edge's matrix must equal eps times its own transpose.
 * Requires an even number of vertices; quivers with a self-paired vertex
 * should be lifted through their bipartite reduction instead.
 */
Representation symmetric_embed(const SymQuiverA& q, const std::vector<int>& dims,
                               const std::map<int, IntMatrix>& given);

/*
 * Transports a representation of the original quiver, described by matrices
 * on one edge per mirror-orbit, to a symmetric point of the bipartite
 * reduction: original arrows copy over along edge_image, each contracted
 * arrow receives an isomorphism (the form matrix on the self-paired
 * contracted edge, the identity elsewhere), and the remaining arrows are
 * filled in by symmetric_embed.
 */
Representation lift_representation(const BipartiteReduction& red,
                                   const std::vector<int>& original_dims,
                                   const std::map<int, IntMatrix>& given);

/*
 * Staircase matrix of a canonical bipartite representation: block rows are
 * the sinks 1, 3, ..., n-1 top to bottom, block columns the sources
 * n, n-2, ..., 2 left to right, and the arrow of edge e occupies the block
 * (sink row, source column) of its endpoints. With `with_sign`, the blocks
 * of negative edges (e > n/2) are multiplied by eps; the self-paired edge's
 * block sits on the main block diagonal and is never rescaled.
 */
IntMatrix quiver_staircase(const Representation& rep, bool with_sign);

/*
 * Square extension of the staircase used to translate orbit closures into
 * matrix Schubert conditions:
 *
 *     [ staircase  I ]
 *     [ (eps) I    0 ]
 *
 * where the lower-left identity is multiplied by eps when `with_sign` is
 * set. Row and column blocks follow block_structure_for; the northwest rank
 * table does not depend on `with_sign`.
 */
IntMatrix zelevinsky_matrix(const Representation& rep, bool with_sign);

// Rank of the staircase submatrix spanned by the sinks and sources inside
// the vertex interval J. Singleton intervals give 0.
int interval_rank(const Representation& rep, const Interval& j);

// interval_rank for every interval, indexed like all_intervals(n).
std::vector<int> interval_rank_vector(const Representation& rep);

}  // namespace symquiv
