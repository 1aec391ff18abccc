#include "symquiv/permutation.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace symquiv;

namespace {

std::vector<int> ol(const Permutation& w) { return w.one_line(); }

}  // namespace

TEST_CASE("Permutation: construction, parse, str, inverse") {
    CHECK(ol(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(Permutation::parse("351624") == Permutation({3, 5, 1, 6, 2, 4}));
    CHECK(Permutation::parse("3,5,1,6,2,4") == Permutation({3, 5, 1, 6, 2, 4}));
    CHECK(Permutation::parse("3 5 1 6 2 4") == Permutation({3, 5, 1, 6, 2, 4}));
    CHECK(Permutation::parse("3, 5, 1,\t6, 2, 4") == Permutation({3, 5, 1, 6, 2, 4}));
    CHECK(Permutation::parse("11 2 3 4 5 6 7 8 9 10 1")(1) == 11);
    CHECK(Permutation::parse("351624").str() == "351624");

    // n >= 10 uses the comma form in both directions.
    std::vector<int> big(11);
    for (int i = 0; i < 11; ++i) big[i] = i + 1;
    std::swap(big[0], big[10]);
    const Permutation w(big);
    CHECK(w.str() == "11,2,3,4,5,6,7,8,9,10,1");
    CHECK(Permutation::parse(w.str()) == w);

    CHECK(Permutation::parse("21").inverse() == Permutation::parse("21"));
    CHECK(Permutation::parse("231").inverse() == Permutation::parse("312"));
    const Permutation v = Permutation::parse("351624");
    CHECK(v.inverse().inverse() == v);
    CHECK(v(1) == 3);
    CHECK(v(6) == 4);
    CHECK(v.size() == 6);

    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,x,3"), std::invalid_argument);
}

TEST_CASE("Permutation: involution predicates and matrix") {
    CHECK(Permutation::parse("2143").is_involution());
    CHECK(Permutation::parse("2143").is_fpf_involution());
    CHECK(Permutation::parse("1324").is_involution());
    CHECK_FALSE(Permutation::parse("1324").is_fpf_involution());
    CHECK_FALSE(Permutation::parse("231").is_involution());

    const IntMatrix m = Permutation::parse("312").matrix();
    CHECK(m == IntMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("nw_rank_table of a permutation matches the matrix table") {
    for (const Permutation& w : oracles::all_permutations(4))
        CHECK(nw_rank_table(w) == nw_rank_table(w.matrix()));
    const Permutation v = Permutation::parse("351624");
    const RankTable t = nw_rank_table(v);
    CHECK(t.entry(2, 5) == 2);
    CHECK(t.entry(6, 6) == 6);
    CHECK(t.entry(4, 4) == 2);
}

TEST_CASE("bruhat_leq agrees with the transposition-closure oracle on all of S4") {
    const auto s4 = oracles::all_permutations(4);
    for (const Permutation& u : s4)
        for (const Permutation& v : s4)
            CHECK(bruhat_leq(u, v) == oracles::bruhat_leq_oracle(u, v));
}

TEST_CASE("bruhat_leq: pinned comparisons") {
    CHECK(bruhat_leq(Permutation::parse("1234"), Permutation::parse("4321")));
    CHECK(bruhat_leq(Permutation::parse("1234"), Permutation::parse("1234")));
    CHECK_FALSE(bruhat_leq(Permutation::parse("4321"), Permutation::parse("1234")));
    CHECK(bruhat_leq(Permutation::parse("2143"), Permutation::parse("3412")));
    CHECK_FALSE(bruhat_leq(Permutation::parse("3412"), Permutation::parse("2143")));
    // Incomparable pair.
    CHECK_FALSE(bruhat_leq(Permutation::parse("3142"), Permutation::parse("2413")));
    CHECK_FALSE(bruhat_leq(Permutation::parse("2413"), Permutation::parse("3142")));
}

TEST_CASE("diagrams: pinned cells and essential corners for 21563487") {
    const Diagrams dg = diagrams(Permutation::parse("21563487"));
    using P = std::pair<int, int>;
    CHECK(dg.d == std::vector<P>{{1, 1}, {3, 3}, {3, 4}, {4, 3}, {4, 4}, {7, 7}});
    CHECK(dg.d_plus == std::vector<P>{{1, 1}, {3, 3}, {4, 3}, {4, 4}, {7, 7}});
    CHECK(dg.d_minus == std::vector<P>{{4, 3}});
    CHECK(dg.e == std::vector<P>{{1, 1}, {4, 4}, {7, 7}});
    CHECK(dg.e_plus == std::vector<P>{{1, 1}, {4, 4}, {7, 7}});
    // The southeast corner of the restricted diagram need not be a corner of
    // the full diagram: (4, 3) has (4, 4) east of it in D but not in D-.
    CHECK(dg.e_minus == std::vector<P>{{4, 3}});
}

TEST_CASE("diagrams: structural properties across S4") {
    for (const Permutation& w : oracles::all_permutations(4)) {
        const Diagrams dg = diagrams(w);
        // |D(w)| equals the inversion count.
        int inv = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (w(i) > w(j)) ++inv;
        CHECK(static_cast<int>(dg.d.size()) == inv);
        // Restrictions nest, essential cells sit inside their diagrams.
        const std::set<std::pair<int, int>> d(dg.d.begin(), dg.d.end());
        const std::set<std::pair<int, int>> dp(dg.d_plus.begin(), dg.d_plus.end());
        const std::set<std::pair<int, int>> dm(dg.d_minus.begin(), dg.d_minus.end());
        for (const auto& c : dg.d_plus) {
            CHECK(d.count(c));
            CHECK(c.first >= c.second);
        }
        for (const auto& c : dg.d_minus) {
            CHECK(dp.count(c));
            CHECK(c.first > c.second);
        }
        for (const auto& c : dg.e) CHECK(d.count(c));
        for (const auto& c : dg.e_plus) CHECK(dp.count(c));
        for (const auto& c : dg.e_minus) CHECK(dm.count(c));
        // Essential = southeast corners within the respective diagram.
        for (const auto& c : dg.d) {
            const bool corner = !d.count({c.first + 1, c.second}) && !d.count({c.first, c.second + 1});
            CHECK(corner == (std::find(dg.e.begin(), dg.e.end(), c) != dg.e.end()));
        }
    }
}

TEST_CASE("signed_permutation_matrix") {
    // eps = +1: the plain permutation matrix, for any w.
    const Permutation v = Permutation::parse("351624");
    CHECK(signed_permutation_matrix(v, 1) == v.matrix());

    // eps = -1 on a fixed-point-free involution: below-diagonal entries become
    // -1 and the result is skew-symmetric. 351624 = (13)(25)(46).
    const IntMatrix sm = signed_permutation_matrix(Permutation::parse("351624"), -1);
    CHECK(is_skew_symmetric(sm));
    CHECK(sm(2, 0) == -1);
    CHECK(sm(4, 1) == -1);
    CHECK(sm(5, 3) == -1);
    CHECK(sm(0, 2) == 1);
    CHECK(sm(1, 4) == 1);
    CHECK(sm(3, 5) == 1);
    CHECK_THROWS_AS(signed_permutation_matrix(Permutation::parse("312"), -1),
                    std::invalid_argument);  // not an involution

    const Permutation w = Permutation::parse("21563487");
    const IntMatrix m = signed_permutation_matrix(w, -1);
    CHECK(is_skew_symmetric(m));
    CHECK(m(0, 1) == 1);
    CHECK(m(1, 0) == -1);
    CHECK(m(2, 4) == 1);
    CHECK(m(4, 2) == -1);
    CHECK(m(6, 7) == 1);
    CHECK(m(7, 6) == -1);

    // Signs never change northwest ranks.
    CHECK(nw_rank_table(m) == nw_rank_table(w.matrix()));

    CHECK_THROWS_AS(signed_permutation_matrix(Permutation::parse("1234"), -1),
                    std::invalid_argument);  // has fixed points
    CHECK_THROWS_AS(signed_permutation_matrix(w, 0), std::invalid_argument);
}

TEST_CASE("is_min_double_coset_rep and has_even_diagonal_blocks") {
    const BlockStructure bs = BlockStructure::from_sizes({1, 3, 1, 3});
    // Row blocks {1}, {2,3,4}, {5}, {6,7,8}; column blocks likewise.
    CHECK(is_min_double_coset_rep(Permutation::parse("21563478"), bs));
    // Its fixed-point pairing has the descent 8 > 7 inside row block 4, so it
    // leaves the minimal-representative set.
    CHECK_FALSE(is_min_double_coset_rep(Permutation::parse("21563487"), bs));
    CHECK(is_min_double_coset_rep(Permutation::identity(8), bs));
    // Decreasing inside row block 2: not minimal.
    CHECK_FALSE(is_min_double_coset_rep(Permutation::parse("21653478"), bs));
    // Inverse decreasing inside a column block: 7 before 6 in positions 4, 5
    // of the inverse means the column condition fails.
    CHECK_FALSE(is_min_double_coset_rep(Permutation::parse("21573468"), bs));

    const BlockStructure b22 = BlockStructure::from_sizes({2, 2});
    CHECK(has_even_diagonal_blocks(Permutation::parse("1234"), b22));
    CHECK(has_even_diagonal_blocks(Permutation::parse("3412"), b22));
    CHECK(has_even_diagonal_blocks(Permutation::parse("2143"), b22));
    CHECK_FALSE(has_even_diagonal_blocks(Permutation::parse("1324"), b22));
    // Diagonal cells are counted per block: 21563478 has fixed points 3, 4
    // inside row block 2 (even) and none elsewhere.
    CHECK(has_even_diagonal_blocks(Permutation::parse("21563478"), BlockStructure::from_sizes({1, 3, 1, 3})));
    CHECK_FALSE(has_even_diagonal_blocks(Permutation::parse("21356478"), BlockStructure::from_sizes({1, 3, 1, 3})));
}

TEST_CASE("pair_fixed_points: pinned values and failure modes") {
    CHECK(pair_fixed_points(Permutation::parse("1234"), BlockStructure::from_sizes({4})) ==
          Permutation::parse("2143"));
    CHECK(pair_fixed_points(Permutation::parse("1234"), BlockStructure::from_sizes({2, 2})) ==
          Permutation::parse("2143"));
    CHECK(pair_fixed_points(Permutation::parse("21563478"), BlockStructure::from_sizes({1, 3, 1, 3})) ==
          Permutation::parse("21563487"));
    // Already fixed-point-free: unchanged.
    CHECK(pair_fixed_points(Permutation::parse("3412"), BlockStructure::from_sizes({2, 2})) ==
          Permutation::parse("3412"));

    // Odd number of fixed points in a block.
    CHECK_THROWS_AS(pair_fixed_points(Permutation::parse("132"), BlockStructure::from_sizes({3})),
                    std::invalid_argument);
    // Two fixed points split across blocks: odd in each.
    CHECK_THROWS_AS(pair_fixed_points(Permutation::parse("1243") /* fixed: 1, 2 */,
                                      BlockStructure::from_sizes({1, 3})),
                    std::invalid_argument);
    // Even number of fixed points, but not consecutive within the block.
    CHECK_THROWS_AS(pair_fixed_points(Permutation::parse("1324"), BlockStructure::from_sizes({4})),
                    std::invalid_argument);
    // Not an involution.
    CHECK_THROWS_AS(pair_fixed_points(Permutation::parse("231"), BlockStructure::from_sizes({3})),
                    std::invalid_argument);
}

TEST_CASE("pair_fixed_points: properties on small minimal representatives") {
    // Across all involutions that are minimal double-coset representatives
    // with even diagonal blocks, the pairing map lands on fixed-point-free
    // involutions, moves everything weakly up in Bruhat order, and fixes
    // anything already fixed-point-free.
    const BlockStructure bs = BlockStructure::from_sizes({2, 2});
    std::vector<Permutation> domain, image;
    for (const Permutation& w : involutions(4)) {
        if (!is_min_double_coset_rep(w, bs) || !has_even_diagonal_blocks(w, bs)) continue;
        domain.push_back(w);
        const Permutation a = pair_fixed_points(w, bs);
        image.push_back(a);
        CHECK(a.is_fpf_involution());
        CHECK(bruhat_leq(w, a));
        CHECK(pair_fixed_points(a, bs) == a);
    }
    REQUIRE(domain.size() == 2);
    CHECK(domain[0] == Permutation::parse("1234"));
    CHECK(domain[1] == Permutation::parse("3412"));
    CHECK(image[0] == Permutation::parse("2143"));
    CHECK(image[1] == Permutation::parse("3412"));
}

TEST_CASE("pair_fixed_points: injective on coset-minimal even-block involutions") {
    // A coset-minimal involution carries no off-diagonal 1s inside a diagonal
    // block, so the pairing map can be undone exactly and distinct inputs give
    // distinct outputs. Exercise every composition of 4 and of 6.
    for (int n : {4, 6}) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        const auto rec = [&](auto&& self, int left) -> void {
            if (left == 0) {
                comps.push_back(cur);
                return;
            }
            for (int part = 1; part <= left; ++part) {
                cur.push_back(part);
                self(self, left - part);
                cur.pop_back();
            }
        };
        rec(rec, n);
        for (const auto& sizes : comps) {
            const BlockStructure bs = BlockStructure::from_sizes(sizes);
            std::vector<Permutation> image;
            for (const Permutation& w : involutions(n)) {
                if (!is_min_double_coset_rep(w, bs)) continue;
                if (!has_even_diagonal_blocks(w, bs)) continue;
                image.push_back(pair_fixed_points(w, bs));
            }
            std::sort(image.begin(), image.end());
            const bool distinct = std::adjacent_find(image.begin(), image.end()) == image.end();
            CHECK(distinct);
        }
    }
}

TEST_CASE("involutions: counts, order, and filters") {
    CHECK(involutions(1).size() == 1);
    CHECK(involutions(2).size() == 2);
    CHECK(involutions(3).size() == 4);
    CHECK(involutions(4).size() == 10);
    CHECK(involutions(5).size() == 26);
    CHECK(involutions(6).size() == 76);

    InvolutionFilter fpf;
    fpf.fixed_point_free = true;
    const auto f4 = involutions(4, fpf);
    REQUIRE(f4.size() == 3);
    CHECK(f4[0] == Permutation::parse("2143"));
    CHECK(f4[1] == Permutation::parse("3412"));
    CHECK(f4[2] == Permutation::parse("4321"));
    CHECK(involutions(6, fpf).size() == 15);
    CHECK(involutions(5, fpf).empty());

    // Lexicographic output order.
    const auto inv4 = involutions(4);
    CHECK(std::is_sorted(inv4.begin(), inv4.end()));

    // Interval filters agree with brute-force filtering of all involutions.
    InvolutionFilter box;
    box.bruhat_lo = Permutation::parse("13254");
    box.bruhat_hi = Permutation::parse("53412");
    const auto got = involutions(5, box);
    std::vector<Permutation> expect;
    for (const Permutation& w : involutions(5))
        if (oracles::bruhat_leq_oracle(*box.bruhat_lo, w) &&
            oracles::bruhat_leq_oracle(w, *box.bruhat_hi))
            expect.push_back(w);
    CHECK(got == expect);
    CHECK(!got.empty());

    // Lower bound alone, fixed-point-free, against brute force.
    InvolutionFilter above;
    above.bruhat_lo = Permutation::parse("214365");
    above.fixed_point_free = true;
    const auto got6 = involutions(6, above);
    std::vector<Permutation> expect6;
    for (const Permutation& w : involutions(6, fpf))
        if (oracles::bruhat_leq_oracle(*above.bruhat_lo, w)) expect6.push_back(w);
    CHECK(got6 == expect6);
    CHECK(got6.size() == 15);  // 214365 is the fixed-point-free minimum in S6
}
