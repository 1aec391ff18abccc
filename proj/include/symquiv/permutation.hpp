#pragma once

#include "symquiv/block_structure.hpp"
#include "symquiv/exact_linalg.hpp"
#include "symquiv/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symquiv {

/*
 * Permutations in one-line notation, 1-based: w maps i to w(i). The matrix of
 * w has a 1 in cell (i, w(i)), and the northwest rank table of that matrix,
 * r(i, j) = #{k <= i : w(k) <= j}, characterizes Bruhat order by entrywise
 * domination: u <= v iff r_u >= r_v everywhere.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // Accepts compact digit strings ("351624") or comma-separated values
    // ("3,5,1,6,2,4"); the compact form is only valid for n <= 9.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const;
    bool is_involution() const;
    bool is_fpf_involution() const;  // involution without fixed points

    IntMatrix matrix() const;
    std::string str() const;  // inverse of parse (compact when n <= 9)

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

private:
    std::vector<int> w_;
};

RankTable nw_rank_table(const Permutation& w);

// Bruhat order via entrywise comparison of northwest rank tables.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/*
 * Left-justified diagram of a permutation and its essential cells.
 * D(w) = {(i, j) : w(i) > j and w^{-1}(j) > i}; the variants restrict to
 * on-or-below the diagonal (i >= j) and strictly below (i > j). Essential
 * cells are the southeast corners of each diagram, computed within that
 * diagram: (i, j) is essential when neither (i+1, j) nor (i, j+1) belongs to
 * the same diagram. Cells are listed in row-major order.
 */
struct Diagrams {
    std::vector<std::pair<int, int>> d, d_plus, d_minus;
    std::vector<std::pair<int, int>> e, e_plus, e_minus;
};

Diagrams diagrams(const Permutation& w);

// Matrix of w with each 1 strictly below the diagonal replaced by eps.
// For eps = -1 the permutation must be a fixed-point-free involution, so the
// result is skew-symmetric.
IntMatrix signed_permutation_matrix(const Permutation& w, int eps);

// Minimal-length representative of its double coset for the parabolic pair
// given by the block structure: increasing on every block row range, and
// inverse increasing on every block column range.
bool is_min_double_coset_rep(const Permutation& w, const BlockStructure& bs);

// Every diagonal block of w's matrix contains an even number of diagonal 1s.
bool has_even_diagonal_blocks(const Permutation& w, const BlockStructure& bs);

/*
 * Fixed-point pairing map: inside each diagonal block the fixed points of an
 * involution w (which form a consecutive run for minimal double-coset
 * representatives) are replaced by adjacent transpositions, first with
 * second, third with fourth, and so on. The result is a fixed-point-free
 * involution and is Bruhat-above w. Throws if the fixed points inside some
 * block are odd in number or not consecutive.
 */
Permutation pair_fixed_points(const Permutation& w, const BlockStructure& bs);

struct InvolutionFilter {
    std::optional<Permutation> bruhat_lo;  // keep w with bruhat_lo <= w
    std::optional<Permutation> bruhat_hi;  // keep w with w <= bruhat_hi
    bool fixed_point_free = false;
};

// All involutions of S_n satisfying the filter, in lexicographic order of
// one-line notation. Searches with exact per-row rank pruning, so Bruhat
// interval enumeration stays cheap far below full n! scans.
std::vector<Permutation> involutions(int n, const InvolutionFilter& filter = {});

}  // namespace symquiv
