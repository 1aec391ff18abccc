#include "symquiv/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symquiv {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find_first_of(", \t\n\r") != std::string::npos) {
        std::string separated = text;
        std::replace(separated.begin(), separated.end(), ',', ' ');
        std::istringstream is(separated);
        std::string tok;
        while (is >> tok) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size()) throw std::invalid_argument("bad permutation entry: " + tok);
            w.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("compact permutation form allows digits 1-9 only");
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 1; i <= size(); ++i) inv[w_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if (w_[w_[i - 1] - 1] != i) return false;
    return true;
}

bool Permutation::is_fpf_involution() const {
    for (int i = 1; i <= size(); ++i)
        if (w_[i - 1] == i) return false;
    return is_involution();
}

IntMatrix Permutation::matrix() const {
    IntMatrix m(size(), size());
    for (int i = 1; i <= size(); ++i) m(i - 1, w_[i - 1] - 1) = 1;
    return m;
}

std::string Permutation::str() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int v : w_) os << v;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) os << ',';
            os << w_[i];
        }
    }
    return os.str();
}

RankTable nw_rank_table(const Permutation& w) {
    const int n = w.size();
    RankTable t(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.set(i, j, t.entry(i - 1, j) + (w(i) <= j ? 1 : 0));
    return t;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Bruhat comparison needs equal sizes");
    return RankTable::dominates(nw_rank_table(u), nw_rank_table(v));
}

namespace {

std::vector<std::pair<int, int>> southeast_corners(const std::vector<std::vector<char>>& cells) {
    const int n = static_cast<int>(cells.size()) - 1;
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!cells[i][j]) continue;
            const bool below = i + 1 <= n && cells[i + 1][j];
            const bool right = j + 1 <= n && cells[i][j + 1];
            if (!below && !right) out.emplace_back(i, j);
        }
    return out;
}

}  // namespace

Diagrams diagrams(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    std::vector<std::vector<char>> d(n + 1, std::vector<char>(n + 1, 0));
    std::vector<std::vector<char>> dp = d, dm = d;
    Diagrams out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (w(i) > j && winv(j) > i) {
                d[i][j] = 1;
                out.d.emplace_back(i, j);
                if (i >= j) {
                    dp[i][j] = 1;
                    out.d_plus.emplace_back(i, j);
                }
                if (i > j) {
                    dm[i][j] = 1;
                    out.d_minus.emplace_back(i, j);
                }
            }
        }
    out.e = southeast_corners(d);
    out.e_plus = southeast_corners(dp);
    out.e_minus = southeast_corners(dm);
    return out;
}

IntMatrix signed_permutation_matrix(const Permutation& w, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    if (eps == -1 && !w.is_fpf_involution())
        throw std::invalid_argument(
            "signed matrix with eps = -1 needs a fixed-point-free involution");
    IntMatrix m(w.size(), w.size());
    for (int i = 1; i <= w.size(); ++i) m(i - 1, w(i) - 1) = (w(i) < i ? Int(eps) : Int(1));
    return m;
}

bool is_min_double_coset_rep(const Permutation& w, const BlockStructure& bs) {
    if (w.size() != bs.total()) throw std::invalid_argument("size mismatch with block structure");
    const Permutation winv = w.inverse();
    for (int p = 1; p <= bs.block_count(); ++p)
        for (int i = bs.cut(p - 1) + 1; i < bs.cut(p); ++i)
            if (w(i) > w(i + 1) || winv(i) > winv(i + 1)) return false;
    return true;
}

bool has_even_diagonal_blocks(const Permutation& w, const BlockStructure& bs) {
    if (w.size() != bs.total()) throw std::invalid_argument("size mismatch with block structure");
    for (int p = 1; p <= bs.block_count(); ++p) {
        int fixed = 0;
        for (int i = bs.cut(p - 1) + 1; i <= bs.cut(p); ++i)
            if (w(i) == i) ++fixed;
        if (fixed % 2 != 0) return false;
    }
    return true;
}

Permutation pair_fixed_points(const Permutation& w, const BlockStructure& bs) {
    if (w.size() != bs.total()) throw std::invalid_argument("size mismatch with block structure");
    if (!w.is_involution()) throw std::invalid_argument("fixed-point pairing needs an involution");
    std::vector<int> out = w.one_line();
    for (int p = 1; p <= bs.block_count(); ++p) {
        std::vector<int> fixed;
        for (int i = bs.cut(p - 1) + 1; i <= bs.cut(p); ++i)
            if (w(i) == i) fixed.push_back(i);
        if (fixed.size() % 2 != 0)
            throw std::invalid_argument("fixed points in each diagonal block must be even in number");
        for (std::size_t k = 0; k + 1 < fixed.size(); k += 2) {
            if (fixed[k + 1] != fixed[k] + 1)
                throw std::invalid_argument("fixed points in each diagonal block must be consecutive");
            out[fixed[k] - 1] = fixed[k + 1];
            out[fixed[k + 1] - 1] = fixed[k];
        }
    }
    return Permutation(std::move(out));
}

namespace {

struct InvolutionSearch {
    int n;
    const InvolutionFilter& filter;
    std::vector<int> w;          // 0 = undecided, 1-based positions
    std::vector<char> used;      // values already taken
    std::vector<int> row_ranks;  // r(i, j) for the last completed row prefix
    std::vector<Permutation>& out;
    std::optional<RankTable> lo_table, hi_table;

    InvolutionSearch(int n_, const InvolutionFilter& f, std::vector<Permutation>& out_)
        : n(n_), filter(f), w(n_ + 1, 0), used(n_ + 1, 0), row_ranks(n_ + 1, 0), out(out_) {
        if (f.bruhat_lo) lo_table = nw_rank_table(*f.bruhat_lo);
        if (f.bruhat_hi) hi_table = nw_rank_table(*f.bruhat_hi);
    }

    // Row i has just been decided: check the rank-table row against both
    // bounds. Entries of row i never change once rows 1..i are fixed, so a
    // violation here is permanent and the branch can be cut.
    bool row_ok(int i) {
        int r = 0;
        for (int j = 1; j <= n; ++j) {
            // row_ranks holds r(i-1, j); update in place to r(i, j).
            r = row_ranks[j] + (w[i] <= j ? 1 : 0);
            row_ranks[j] = r;
            if (lo_table && r > lo_table->entry(i, j)) return false;   // would drop below lo
            if (hi_table && r < hi_table->entry(i, j)) return false;   // would rise above hi
        }
        return true;
    }

    void search(int i) {
        if (i > n) {
            std::vector<int> v(w.begin() + 1, w.end());
            out.emplace_back(std::move(v));
            return;
        }
        const std::vector<int> saved(row_ranks);
        if (w[i] != 0) {
            // Forced by an earlier pairing.
            if (row_ok(i)) search(i + 1);
            row_ranks = saved;
            return;
        }
        for (int j = i; j <= n; ++j) {
            if (used[j]) continue;
            if (j == i && filter.fixed_point_free) continue;
            w[i] = j;
            used[j] = 1;
            if (j != i) {
                w[j] = i;
                used[i] = 1;
            }
            if (row_ok(i)) search(i + 1);
            row_ranks = saved;
            w[i] = 0;
            used[j] = 0;
            if (j != i) {
                w[j] = 0;
                used[i] = 0;
            }
        }
    }
};

}  // namespace

std::vector<Permutation> involutions(int n, const InvolutionFilter& filter) {
    if ((filter.bruhat_lo && filter.bruhat_lo->size() != n) ||
        (filter.bruhat_hi && filter.bruhat_hi->size() != n))
        throw std::invalid_argument("Bruhat bounds must have size n");
    std::vector<Permutation> out;
    InvolutionSearch s(n, filter, out);
    s.search(1);
    return out;
}

}  // namespace symquiv
