#pragma once

#include "symquiv/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace symquiv {

/*
 * Exact rank computations over the integers.
 *
 * rank() uses Bareiss fraction-free elimination with full pivoting: every
 * division is exact, intermediate entries stay polynomially bounded in the
 * minors of the input, and the result is the true rank over Q.
 *
 * nw_rank_table() computes every northwest-justified rank r(i,j) =
 * rank(upper-left i x j corner) in one pass per column prefix, by
 * incrementally inserting rows into a fraction-free echelon form. The table
 * is the fundamental invariant of this library: two matrices related by
 * lower-triangular row operations and upper-triangular column operations
 * share it, and all the order criteria are entrywise comparisons of such
 * tables.
 */

// Rank table with 1-based accessors; entry(i, j) with i == 0 or j == 0 is 0.
class RankTable {
public:
    RankTable() = default;
    RankTable(int rows, int cols) : rows_(rows), cols_(cols), r_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int entry(int i, int j) const {
        if (i <= 0 || j <= 0) return 0;
        return r_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
    }
    void set(int i, int j, int v) { r_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)] = v; }

    friend bool operator==(const RankTable& a, const RankTable& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }
    friend bool operator!=(const RankTable& a, const RankTable& b) { return !(a == b); }

    // a dominates b entrywise (a.entry >= b.entry everywhere); shapes must match.
    static bool dominates(const RankTable& a, const RankTable& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.r_.size(); ++k)
            if (a.r_[k] < b.r_[k]) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 1; i <= rows_; ++i) {
            for (int j = 1; j <= cols_; ++j) {
                if (j > 1) os << ' ';
                os << entry(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> r_;
};

// Exact rank via Bareiss elimination with full pivoting. Takes a copy.
template <typename Scalar>
int rank(Matrix<Scalar> m) {
    const int nr = m.rows(), nc = m.cols();
    Scalar prev_pivot(1);
    int r = 0;
    while (r < nr && r < nc) {
        // Full pivoting: any nonzero entry works for exactness.
        int pi = -1, pj = -1;
        for (int i = r; i < nr && pi < 0; ++i)
            for (int j = r; j < nc; ++j)
                if (m(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < nc; ++j) std::swap(m(r, j), m(pi, j));
        if (pj != r)
            for (int i = 0; i < nr; ++i) std::swap(m(i, r), m(i, pj));
        const Scalar pivot = m(r, r);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = r + 1; j < nc; ++j)
                m(i, j) = (m(i, j) * pivot - m(i, r) * m(r, j)) / prev_pivot;
            m(i, r) = Scalar(0);
        }
        prev_pivot = pivot;
        ++r;
    }
    return r;
}

namespace detail {

// Divide a row vector by the gcd of its entries (content), keeping entries
// small during incremental echelon maintenance. Leaves zero rows untouched.
inline void normalize_content(std::vector<Int>& row) {
    Int g(0);
    for (const Int& v : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (Int& v : row) v /= g;
}

// Reduce `row` against an echelon basis (rows with known leading column),
// inserting it if a new pivot survives. Returns true when the rank grew.
inline bool echelon_insert(std::vector<std::vector<Int>>& basis, std::vector<int>& lead,
                           std::vector<Int> row) {
    const int n = static_cast<int>(row.size());
    int col = 0;
    while (col < n) {
        if (row[col] == 0) {
            ++col;
            continue;
        }
        // Does an existing basis row own this leading column?
        int owner = -1;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (lead[b] == col) {
                owner = static_cast<int>(b);
                break;
            }
        if (owner < 0) {
            normalize_content(row);
            basis.push_back(std::move(row));
            lead.push_back(col);
            return true;
        }
        // Cross-multiplied cancellation keeps everything integral.
        const Int a = basis[owner][col];
        const Int b = row[col];
        for (int j = col; j < n; ++j) row[j] = row[j] * a - basis[owner][j] * b;
        normalize_content(row);
        ++col;
    }
    return false;
}

}  // namespace detail

// Table of all northwest ranks: entry(i, j) = rank of the upper-left i x j
// submatrix, for 1 <= i <= rows, 1 <= j <= cols.
inline RankTable nw_rank_table(const IntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    RankTable t(nr, nc);
    // One incremental echelon per column prefix width j: insert rows 1..nr in
    // order, recording the rank after each insertion.
    for (int j = 1; j <= nc; ++j) {
        std::vector<std::vector<Int>> basis;
        std::vector<int> lead;
        int r = 0;
        for (int i = 1; i <= nr; ++i) {
            std::vector<Int> row(j);
            for (int c = 0; c < j; ++c) row[c] = m(i - 1, c);
            if (detail::echelon_insert(basis, lead, std::move(row))) ++r;
            t.set(i, j, r);
        }
    }
    return t;
}

// Northwest rank table sampled at block boundaries: entry(p, q) = rank of the
// submatrix spanning block-rows 1..p and block-columns 1..q, where the cuts
// are the partial sums of the block sizes (cuts[0] = 0).
inline RankTable block_rank_table(const RankTable& nw, const std::vector<int>& row_cuts,
                                  const std::vector<int>& col_cuts) {
    const int np = static_cast<int>(row_cuts.size()) - 1;
    const int nq = static_cast<int>(col_cuts.size()) - 1;
    RankTable t(np, nq);
    for (int p = 1; p <= np; ++p)
        for (int q = 1; q <= nq; ++q) t.set(p, q, nw.entry(row_cuts[p], col_cuts[q]));
    return t;
}

inline RankTable block_rank_table(const IntMatrix& m, const std::vector<int>& row_cuts,
                                  const std::vector<int>& col_cuts) {
    return block_rank_table(nw_rank_table(m), row_cuts, col_cuts);
}

// Solve A x = b exactly over the rationals for square integer A.
// Returns std::nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_square(const IntMatrix& a,
                                                         const std::vector<Int>& b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_square expects square A and matching b");
    // Rational Gauss-Jordan with partial (first-nonzero) pivoting; exact.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
        m[i][n] = Rational(b[i]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[col], m[piv]);
        const Rational inv = Rational(1) / m[col][col];
        for (int j = col; j <= n; ++j) m[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace symquiv
