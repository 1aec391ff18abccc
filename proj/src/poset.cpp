#include "symquiv/poset.hpp"

#include "symquiv/parallel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symquiv {

namespace {

bool ranks_leq(const Orbit& a, const Orbit& b) {
    for (std::size_t k = 0; k < a.ranks.size(); ++k)
        if (a.ranks[k] > b.ranks[k]) return false;
    return true;
}

}  // namespace

OrbitPoset degeneration_poset(const OrbitSpace& space) {
    const int n = static_cast<int>(space.orbits.size());
    OrbitPoset p;
    p.count = n;
    p.leq.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p.leq[i][j] = ranks_leq(space.orbits[i], space.orbits[j]) ? 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !p.leq[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) cover = false;
            if (cover) p.covers.emplace_back(i, j);
        }
    std::sort(p.covers.begin(), p.covers.end());
    for (int i = 0; i < n; ++i) {
        bool is_max = true, is_min = true;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (p.leq[i][j] && !p.leq[j][i]) is_max = false;
            if (p.leq[j][i] && !p.leq[i][j]) is_min = false;
        }
        if (is_max) p.maximal.push_back(i);
        if (is_min) p.minimal.push_back(i);
    }
    return p;
}

bool matrix_orbit_leq(const OrbitSpace& space, int i, int j) {
    const auto square = [&](int idx) {
        return zelevinsky_matrix(orbit_representative(space, idx), true);
    };
    return matrix_orbit_leq(square(i), square(j), space.blocks);
}

bool matrix_orbit_leq(const IntMatrix& m1, const IntMatrix& m2, const BlockStructure& bs) {
    const int n = bs.total();
    for (const IntMatrix* m : {&m1, &m2}) {
        if (m->rows() != n || m->cols() != n)
            throw std::invalid_argument("matrix shape does not match the block structure");
        if (rank(*m) != n) throw std::invalid_argument("orbit representatives must be invertible");
    }
    const bool both_sym = is_symmetric(m1) && is_symmetric(m2);
    const bool both_skew = is_skew_symmetric(m1) && is_skew_symmetric(m2);
    if (!both_sym && !both_skew)
        throw std::invalid_argument(
            "orbit representatives must both be symmetric or both skew-symmetric");
    return RankTable::dominates(block_rank_table(m2, bs.cuts, bs.cuts),
                                block_rank_table(m1, bs.cuts, bs.cuts));
}

namespace {

std::string perm_list(const std::vector<Permutation>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ' ';
        os << ps[i].str();
    }
    return os.str();
}

}  // namespace

VerifyReport verify_dictionary(const OrbitSpace& space) {
    VerifyReport report;
    const int n = static_cast<int>(space.orbits.size());
    report.orbit_count = n;
    const OrbitPoset poset = degeneration_poset(space);

    // Per-orbit data, computed once (and in parallel when configured).
    std::vector<Permutation> v(n), veps(n);
    std::vector<RankTable> rep_table(n);
    std::vector<std::string> build_errors(n);
    parallel_for(n, [&](int i) {
        try {
            const Representation rep = orbit_representative(space, i);
            rep_table[i] = block_rank_table(zelevinsky_matrix(rep, true), space.blocks.cuts,
                                            space.blocks.cuts);
            const RankTable unsigned_table = block_rank_table(
                zelevinsky_matrix(rep, false), space.blocks.cuts, space.blocks.cuts);
            if (unsigned_table != rep_table[i])
                throw std::logic_error("signed and unsigned square matrices disagree on ranks");
            v[i] = zelevinsky_permutation(rep_table[i], space.blocks);
            veps[i] = space.reduction.bipartite.eps() == 1
                          ? v[i]
                          : pair_fixed_points(v[i], space.blocks);
        } catch (const std::exception& e) {
            build_errors[i] = e.what();
        }
    });
    for (int i = 0; i < n; ++i)
        if (!build_errors[i].empty()) {
            report.checks.push_back(
                {"orbit-data", false, "orbit " + std::to_string(i) + ": " + build_errors[i]});
            return report;
        }
    report.veps = veps;

    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, pass ? std::string() : detail});
    };

    add("unique-extremes",
        poset.maximal.size() == 1 && poset.minimal.size() == 1 &&
            poset.maximal[0] == space.dense_index,
        std::to_string(poset.maximal.size()) + " maximal and " +
            std::to_string(poset.minimal.size()) + " minimal orbits");

    bool injective = true;
    std::string inj_detail;
    for (int i = 0; i < n && injective; ++i)
        for (int j = i + 1; j < n; ++j)
            if (veps[i] == veps[j]) {
                injective = false;
                inj_detail = "orbits " + std::to_string(i) + " and " + std::to_string(j) +
                             " share " + veps[i].str();
                break;
            }
    add("injective", injective, inj_detail);

    bool reversing = true;
    std::string rev_detail;
    for (int i = 0; i < n && reversing; ++i)
        for (int j = 0; j < n; ++j)
            if (static_cast<bool>(poset.leq[i][j]) != bruhat_leq(veps[j], veps[i])) {
                reversing = false;
                rev_detail = "orbits " + std::to_string(i) + ", " + std::to_string(j) + " (" +
                             veps[i].str() + ", " + veps[j].str() + ")";
                break;
            }
    add("order-reversing", reversing, rev_detail);

    {
        const std::vector<Permutation> predicted = bruhat_image_set(space);
        std::vector<Permutation> got(veps);
        std::sort(got.begin(), got.end());
        bool pass;
        std::string detail;
        if (space.reduction.contracted.empty()) {
            pass = got == predicted;
            if (!pass)
                detail = "got {" + perm_list(got) + "}, predicted {" + perm_list(predicted) + "}";
        } else {
            // Image must be a Bruhat-downward-closed subset of the predicted
            // set for the bipartite quiver.
            const std::set<Permutation> got_set(got.begin(), got.end());
            pass = std::includes(predicted.begin(), predicted.end(), got.begin(), got.end());
            if (!pass) {
                detail = "image {" + perm_list(got) + "} is not contained in {" +
                         perm_list(predicted) + "}";
            } else {
                for (const Permutation& a : predicted) {
                    if (got_set.count(a)) continue;
                    for (const Permutation& w : got)
                        if (bruhat_leq(a, w)) {
                            pass = false;
                            detail = a.str() + " is predicted and below " + w.str() +
                                     " but missing from the image";
                            break;
                        }
                    if (!pass) break;
                }
            }
        }
        add("image", pass, detail);
    }

    {
        bool fidelity = true;
        std::string detail;
        const int eps = space.reduction.bipartite.eps();
        for (int i = 0; i < n && fidelity; ++i) {
            const RankTable perm_table =
                block_rank_table(signed_permutation_matrix(veps[i], eps), space.blocks.cuts,
                                 space.blocks.cuts);
            const RankTable plain_table =
                block_rank_table(veps[i].matrix(), space.blocks.cuts, space.blocks.cuts);
            if (perm_table != rep_table[i] || plain_table != rep_table[i]) {
                fidelity = false;
                detail = "orbit " + std::to_string(i) + " (" + veps[i].str() + ")";
            }
        }
        add("block-rank-fidelity", fidelity, detail);
    }

    {
        const Permutation& vmax = veps[space.dense_index];
        const Permutation vsq = zero_orbit_permutation(space.blocks.total());
        bool bounds = true;
        std::string detail;
        for (int i = 0; i < n && bounds; ++i)
            if (!bruhat_leq(vmax, veps[i]) || !bruhat_leq(veps[i], vsq)) {
                bounds = false;
                detail = "orbit " + std::to_string(i) + " (" + veps[i].str() + ")";
            }
        add("interval-bounds", bounds, detail);
    }

    {
        bool consistent = true;
        std::string detail;
        for (int i = 0; i < n && consistent; ++i)
            for (int j = 0; j < n; ++j) {
                const bool matrix_leq = RankTable::dominates(rep_table[j], rep_table[i]);
                if (matrix_leq != static_cast<bool>(poset.leq[i][j])) {
                    consistent = false;
                    detail = "orbits " + std::to_string(i) + ", " + std::to_string(j);
                    break;
                }
            }
        add("matrix-order-consistency", consistent, detail);
    }

    return report;
}

std::string to_dot(const OrbitSpace& space, const OrbitPoset& poset,
                   const std::vector<Permutation>& veps) {
    const int n = static_cast<int>(space.orbits.size());
    std::ostringstream os;
    os << "digraph orbit_poset {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (int i = 0; i < n; ++i) {
        os << "  o" << i << " [label=\"" << i << ": " << veps[i].str() << "\\n";
        bool first = true;
        for (std::size_t k = 0; k < space.intervals.size(); ++k) {
            if (space.intervals[k].length() < 2) continue;
            if (!first) os << ' ';
            os << space.intervals[k].str() << '=' << space.orbits[i].ranks[k];
            first = false;
        }
        os << "\"];\n";
    }
    for (const auto& [a, b] : poset.covers) os << "  o" << a << " -> o" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace symquiv
