/*
 * Acceptance suite: end-to-end checks of the orbit/involution dictionary.
 * Prints one line per criterion and exits nonzero if any of them fails;
 * failure details go to stderr.
 */
#include "symquiv/exact_linalg.hpp"
#include "symquiv/orbits.hpp"
#include "symquiv/permutation.hpp"
#include "symquiv/poset.hpp"
#include "symquiv/representation.hpp"
#include "symquiv/zelevinsky.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace symquiv;

RankTable table_from(const std::vector<std::vector<int>>& rows) {
    RankTable t(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            t.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, rows[i][j]);
    return t;
}

struct SpaceSpec {
    SymQuiverA quiver;
    std::vector<int> dims;
    std::string label;
};

std::vector<SpaceSpec> dictionary_instances() {
    std::vector<SpaceSpec> out;
    for (int eps : {1, -1}) {
        const std::string sign = eps == 1 ? "+1" : "-1";
        for (int k = 1; k <= 3; ++k)
            out.push_back({fixtures::a2(eps), {k, k}, "two-vertex (" + std::to_string(k) + "," +
                                                          std::to_string(k) + ") eps=" + sign});
        out.push_back({fixtures::a4_bipartite(eps), {1, 2, 2, 1}, "bipartite 1221 eps=" + sign});
        out.push_back({fixtures::a4_bipartite(eps), {1, 3, 3, 1}, "bipartite 1331 eps=" + sign});
        out.push_back({fixtures::a3_path(eps), {1, 2, 1}, "path 121 eps=" + sign});
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1

bool criterion_worked_example(std::ostream& why) {
    const fixtures::WorkedExample ex;
    const Representation rep = ex.representation();
    bool ok = true;
    if (rep.matrix(1) != ex.a || rep.matrix(2) != ex.b ||
        rep.matrix(3) != ex.a.transposed()) {
        ok = false;
        why << "symmetric embedding does not reproduce (A, B, A^t); ";
    }
    const BlockStructure bs = block_structure_for(ex.quiver, ex.dims);
    const RankTable expect = table_from({{0, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 4, 5}, {1, 4, 5, 8}});
    if (block_rank_table(zelevinsky_matrix(rep, true), bs.cuts, bs.cuts) != expect) {
        ok = false;
        why << "block rank table mismatch; ";
    }
    const std::string v = zelevinsky_permutation(rep).str();
    const std::string veps = sym_zelevinsky_permutation(rep).str();
    if (v != "21563478" || veps != "21563487") {
        ok = false;
        why << "permutations v=" << v << " veps=" << veps
            << " (expected 21563478 / 21563487); ";
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion_rank_table(std::ostream& why) {
    const RankTable expect = table_from({{0, 0, 1, 1, 1, 1},
                                         {0, 0, 1, 1, 2, 2},
                                         {1, 1, 2, 2, 3, 3},
                                         {1, 1, 2, 2, 3, 4},
                                         {1, 2, 3, 3, 4, 5},
                                         {1, 2, 3, 4, 5, 6}});
    const RankTable got = nw_rank_table(Permutation::parse("351624").matrix());
    if (got != expect) {
        why << "northwest rank table of 351624 is\n" << got.str();
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 3

bool criterion_essential_sets(std::ostream& why) {
    const Diagrams d = diagrams(Permutation::parse("21563487"));
    const std::vector<std::pair<int, int>> eplus = {{1, 1}, {4, 4}, {7, 7}};
    const std::vector<std::pair<int, int>> eminus = {{4, 3}};
    if (d.e_plus != eplus || d.e_minus != eminus) {
        why << "essential sets of 21563487 came out wrong";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 4

bool criterion_bruhat_oracle(std::ostream& why) {
    long long mismatches = 0;
    const auto s4 = oracles::all_permutations(4);
    for (const Permutation& u : s4)
        for (const Permutation& v : s4)
            if (bruhat_leq(u, v) != oracles::bruhat_leq_oracle(u, v)) ++mismatches;

    std::mt19937 rng(20260815u);
    std::vector<int> base = {1, 2, 3, 4, 5, 6};
    const auto random_perm = [&] {
        std::vector<int> line = base;
        std::shuffle(line.begin(), line.end(), rng);
        return Permutation(line);
    };
    for (int t = 0; t < 10000; ++t) {
        const Permutation u = random_perm();
        const Permutation v = random_perm();
        if (bruhat_leq(u, v) != oracles::bruhat_leq_oracle(u, v)) ++mismatches;
    }
    if (mismatches != 0) {
        why << mismatches << " disagreements with the reflection-closure oracle";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 5

bool criterion_dictionary(std::ostream& why) {
    bool ok = true;
    for (const SpaceSpec& s : dictionary_instances()) {
        const OrbitSpace space = build_orbit_space(s.quiver, s.dims);
        const VerifyReport report = verify_dictionary(space);
        for (const VerifyCheck& c : report.checks)
            if (!c.pass) {
                ok = false;
                why << s.label << ": " << c.name << " failed (" << c.detail << "); ";
            }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool rank_table_properties(const IntMatrix& m, std::ostream& why) {
    const RankTable t = nw_rank_table(m);
    if (t.entry(m.rows(), m.cols()) != oracles::naive_rank(m)) {
        why << "corner entry is not the matrix rank; ";
        return false;
    }
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) {
            const int dr = t.entry(i, j) - t.entry(i - 1, j);
            const int dc = t.entry(i, j) - t.entry(i, j - 1);
            if (dr < 0 || dr > 1 || dc < 0 || dc > 1) {
                why << "rank steps outside {0,1}; ";
                return false;
            }
            if (t.entry(i, j) + t.entry(i - 1, j - 1) <
                t.entry(i - 1, j) + t.entry(i, j - 1)) {
                why << "submodularity violated; ";
                return false;
            }
        }
    return true;
}

void compositions_of(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            cur.push_back(part);
            self(self, left - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
}

bool criterion_structural(std::ostream& why) {
    bool ok = true;
    std::mt19937 rng(424242u);

    for (int t = 0; t < 500 && ok; ++t) {
        std::uniform_int_distribution<int> size(1, 6);
        const IntMatrix m = oracles::random_matrix(rng, size(rng), size(rng), -4, 4);
        if (!rank_table_properties(m, why)) {
            ok = false;
            why << "random matrix #" << t << "; ";
        }
    }

    for (int t = 0; t < 100 && ok; ++t) {
        std::uniform_int_distribution<int> size(2, 8);
        const IntMatrix m = oracles::random_skew_matrix(rng, size(rng), -4, 4);
        const RankTable table = nw_rank_table(m);
        for (int i = 1; i <= m.rows(); ++i)
            if (table.entry(i, i) % 2 != 0) {
                ok = false;
                why << "odd diagonal rank in a skew matrix; ";
                break;
            }
    }

    for (const SpaceSpec& s : dictionary_instances()) {
        const OrbitSpace space = build_orbit_space(s.quiver, s.dims);
        const int nb = space.reduction.bipartite.vertex_count();
        for (const Orbit& o : space.orbits) {
            if (ranks_from_multiplicities(nb, o.mult) != o.ranks ||
                multiplicities_from_ranks(space.reduction.bipartite, space.dims, o.ranks) !=
                    o.mult) {
                ok = false;
                why << s.label << ": multiplicities/ranks round trip failed; ";
            }
        }

        const std::vector<Permutation> veps = orbit_permutations(space);
        const Permutation vmax = veps[space.dense_index];
        const Permutation vbox = zero_orbit_permutation(space.blocks.total());
        for (const Permutation& w : veps)
            if (!bruhat_leq(vmax, w) || !bruhat_leq(w, vbox)) {
                ok = false;
                why << s.label << ": permutation outside [dense, zero] interval; ";
            }
    }

    for (int n : {2, 4, 6, 8}) {
        const std::vector<Permutation> inv = involutions(n);
        std::vector<std::vector<int>> comps;
        compositions_of(n, comps);
        for (const auto& sizes : comps) {
            const BlockStructure bs = BlockStructure::from_sizes(sizes);
            std::vector<Permutation> image;
            for (const Permutation& u : inv) {
                if (!is_min_double_coset_rep(u, bs)) continue;
                if (!has_even_diagonal_blocks(u, bs)) continue;
                const Permutation a = pair_fixed_points(u, bs);
                if (!a.is_fpf_involution()) {
                    ok = false;
                    why << "pairing " << u.str() << " is not fixed-point-free; ";
                }
                image.push_back(a);
            }
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                ok = false;
                why << "pairing map not injective for blocks of total " << n << "; ";
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 7

bool criterion_orbit_counts(std::ostream& why) {
    const std::size_t plus = build_orbit_space(fixtures::a2(1), {2, 2}).orbits.size();
    const std::size_t minus = build_orbit_space(fixtures::a2(-1), {2, 2}).orbits.size();
    if (plus != 3 || minus != 2) {
        why << "got " << plus << " symmetric and " << minus
            << " alternating orbits (expected 3 and 2)";
        return false;
    }
    return true;
}

struct Criterion {
    int number;
    const char* slug;
    double budget_seconds;
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked-example", 1.0, criterion_worked_example},
        {2, "rank-table", 1.0, criterion_rank_table},
        {3, "essential-sets", 1.0, criterion_essential_sets},
        {4, "bruhat-oracle", 10.0, criterion_bruhat_oracle},
        {5, "dictionary-suite", 120.0, criterion_dictionary},
        {6, "structural-suite", 60.0, criterion_structural},
        {7, "orbit-counts", 1.0, criterion_orbit_counts},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream why;
        bool pass = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            pass = c.run(why);
        } catch (const std::exception& e) {
            why << "exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && secs > c.budget_seconds) {
            pass = false;
            why << "exceeded time budget of " << c.budget_seconds << "s";
        }
        std::ostringstream line;
        line << "criterion " << c.number << " (" << c.slug << "): " << (pass ? "PASS" : "FAIL")
             << " [" << std::fixed << std::setprecision(3) << secs << "s]";
        std::cout << line.str() << std::endl;
        if (!pass) {
            ++failures;
            std::cerr << "  " << why.str() << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}
