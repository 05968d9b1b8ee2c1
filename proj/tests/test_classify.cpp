#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crucial/classify.hpp"
#include "crucial/count.hpp"
#include "crucial/verify.hpp"
#include "oracles.hpp"

using namespace crucial;

namespace {

Permutation perm(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

}  // namespace

TEST_CASE("type names round trip") {
    for (CrucialType t : kAllCrucialTypes) CHECK(crucial_type_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(crucial_type_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("staircase checks on fixed tableaux") {
    CHECK(staircase_top_right({{1, 2, 3}, {4, 5}}));
    CHECK(staircase_top_right({{1, 2, 3, 4}}));
    CHECK_FALSE(staircase_top_right({{1, 2, 5}, {3, 4}}));
    CHECK(staircase_bottom_left({{1}, {2}, {3}}));
    CHECK(staircase_bottom_left({{1, 2, 5}, {3, 4}}));
    CHECK_FALSE(staircase_bottom_left({{1, 2, 3}, {4, 5}}));
    CHECK(staircase_bottom_left({{1, 3, 4}, {2, 5}}));
    CHECK(staircase_top_right({{1, 3, 4}, {2, 5}}));
}

TEST_CASE("greedy staircase scan equals exhaustive chain search") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& shape : enumerate_shapes(n, n, n, false))
            for (const auto& t : enumerate_syt(shape)) {
                CHECK(staircase_top_right(t) == oracles::staircase_top_right_exhaustive(t.rows()));
                CHECK(staircase_bottom_left(t) == oracles::staircase_bottom_left_exhaustive(t.rows()));
                CHECK(staircase_bottom_left(t) == staircase_top_right(transpose(t)));
            }
}

TEST_CASE("direct right-cruciality on fixed words") {
    const PatternSpec spec(4, 3);
    CHECK(is_right_crucial_direct(perm({1, 4, 5, 2, 3}), spec));
    CHECK(is_right_crucial_direct(perm({1, 3, 2, 5, 4}), spec));
    CHECK_FALSE(is_right_crucial_direct(perm({1, 2, 3}), spec));  // appending 1 keeps avoidance
    CHECK_FALSE(is_right_crucial_direct(perm({1, 2, 3, 4}), spec));  // does not avoid
}

TEST_CASE("direct classification on fixed words") {
    const CrucialClass quadro = classify_direct(perm({2, 1, 3, 5, 4}), PatternSpec(4, 3));
    CHECK(quadro.right);
    CHECK(quadro.left);
    CHECK(quadro.top);
    CHECK(quadro.bottom);
    CHECK(quadro.quadrocrucial());

    const CrucialClass tr = classify_direct(perm({1, 2, 4, 3}), PatternSpec(4, 3));
    CHECK(tr.top_right());
    CHECK_FALSE(tr.left);

    const CrucialClass none = classify_direct(perm({1, 2, 3}), PatternSpec(4, 3));
    CHECK_FALSE(none.any());

    const CrucialClass empty = classify_direct(Permutation(), PatternSpec(3, 3));
    CHECK_FALSE(empty.any());
}

TEST_CASE("tableau-level classification of fixed words") {
    CHECK(classify_rsk(perm({4, 1, 5, 2, 3}), PatternSpec(4, 3)).right);
    CHECK(classify_rsk(perm({2, 1, 3, 5, 4}), PatternSpec(4, 3)).quadrocrucial());
    CHECK_FALSE(classify_rsk(perm({1, 2, 3}), PatternSpec(4, 3)).any());
}

TEST_CASE("direct and tableau classification agree on short lengths") {
    for (int k = 3; k <= 5; ++k)
        for (int l = 3; l <= k; ++l)
            for (int n = 0; n <= 6; ++n)
                for (const auto& p : oracles::all_perms(n))
                    CHECK(classify_direct(p, PatternSpec(k, l)) == classify_rsk(p, PatternSpec(k, l)));
}

TEST_CASE("classification agreement holds at l = 2 as well") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : oracles::all_perms(n)) {
            CHECK(classify_direct(p, PatternSpec(4, 2)) == classify_rsk(p, PatternSpec(4, 2)));
            CHECK(classify_direct(p, PatternSpec(2, 3)) == classify_rsk(p, PatternSpec(2, 3)));
        }
}

TEST_CASE("reverse, inverse and complement permute the directional flags") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& p : oracles::all_perms(n))
            for (int k = 3; k <= 4; ++k)
                for (int l = 3; l <= 4; ++l) {
                    const PatternSpec spec(k, l);
                    const bool r = is_right_crucial_direct(p, spec);
                    CHECK(r == is_left_crucial_direct(reverse(p), spec.swapped()));
                    CHECK(r == is_top_crucial_direct(inverse(p), spec));
                    CHECK(r == is_bottom_crucial_direct(complement(inverse(p)), spec.swapped()));
                }
}

TEST_CASE("minimal top-right construction") {
    CHECK(minimal_top_right(PatternSpec(4, 3)) == perm({1, 2, 4, 3}));
    CHECK(minimal_top_right(PatternSpec(3, 3)) == perm({1, 3, 2}));
    CHECK(minimal_top_right(PatternSpec(5, 4)) == perm({1, 2, 3, 6, 5, 4}));
    CHECK_THROWS_AS(minimal_top_right(PatternSpec(2, 3)), std::domain_error);
    for (int k = 3; k <= 5; ++k)
        for (int l = 3; l <= 5; ++l) {
            const PatternSpec spec(k, l);
            const Permutation p = minimal_top_right(spec);
            CHECK(p.size() == k + l - 3);
            CHECK(classify_direct(p, spec).top_right());
        }
}

TEST_CASE("minimal quadrocrucial construction") {
    CHECK(minimal_quadrocrucial(PatternSpec(4, 3)) == perm({2, 1, 3, 5, 4}));
    CHECK(minimal_quadrocrucial(PatternSpec(5, 3)) == perm({2, 1, 3, 4, 6, 5}));
    CHECK_THROWS_AS(minimal_quadrocrucial(PatternSpec(3, 2)), std::domain_error);
    for (int k = 3; k <= 5; ++k)
        for (int l = 3; l <= 5; ++l) {
            const PatternSpec spec(k, l);
            const Permutation p = minimal_quadrocrucial(spec);
            CHECK(p.size() == k + 2 * l - 5);
            CHECK(classify_direct(p, spec).quadrocrucial());
        }
}

TEST_CASE("doubling an element extends the constructed minimal quadrocrucial") {
    const PatternSpec spec(4, 3);
    const Permutation grown = double_element(perm({2, 1, 3, 5, 4}), 3, true);
    CHECK(grown == perm({2, 1, 4, 3, 6, 5}));
    CHECK(classify_direct(grown, spec).quadrocrucial());
    CHECK(double_element(perm({2, 1, 3, 5, 4}), 3, false) == perm({2, 1, 3, 4, 6, 5}));
    CHECK_THROWS_AS(double_element(perm({2, 1}), 3, false), std::invalid_argument);
}

TEST_CASE("the long quadrocrucial witness defeats element doubling") {
    const PatternSpec spec(4, 4);
    const Permutation ce = counterexample_quadrocrucial(spec);
    CHECK(ce == Permutation({4, 3, 7, 8, 1, 2, 6, 5}));
    CHECK(ce.size() == 2 * (spec.k + spec.l - 4));
    CHECK(classify_direct(ce, spec).quadrocrucial());
    for (int x = 1; x <= ce.size(); ++x)
        for (bool larger : {false, true})
            CHECK_FALSE(classify_direct(double_element(ce, x, larger), spec).quadrocrucial());

    for (int k = 3; k <= 5; ++k)
        for (int l = 3; l <= 4; ++l)
            CHECK(counterexample_quadrocrucial(PatternSpec(k, l)).size() == 2 * (k + l - 4));
}

TEST_CASE("non-extendable and irreducible") {
    const PatternSpec spec33(3, 3);
    // length 4 is maximal at (3,3): nothing extends
    for (const auto& p : list_brute(4, spec33, CrucialType::quadrocrucial))
        CHECK(is_non_extendable(p, spec33, CrucialType::quadrocrucial));
    CHECK_THROWS_AS(is_non_extendable(Permutation::identity(3), spec33, CrucialType::right),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(Permutation::identity(3), spec33, CrucialType::right),
                    std::invalid_argument);

    // minimal ones delete nothing by definition of minimal length
    const PatternSpec spec(4, 3);
    for (const auto& p : list_brute(4, spec, CrucialType::right))
        CHECK(is_irreducible(p, spec, CrucialType::right));
}

TEST_CASE("irreducible bicrucial permutations exist above minimal length") {
    const PatternSpec spec(4, 3);  // minimal bicrucial length 5; irreducible at 2k+l-5 = 6
    bool found = false;
    for (const auto& p : list_brute(6, spec, CrucialType::bicrucial))
        if (is_irreducible(p, spec, CrucialType::bicrucial)) {
            found = true;
            break;
        }
    CHECK(found);
}

TEST_CASE("minimal structure predicates") {
    const PatternSpec spec(4, 3);
    CHECK(has_minimal_right_crucial_form(perm({1, 4, 2, 3}), spec));
    CHECK_FALSE(has_minimal_right_crucial_form(perm({2, 1, 4, 3}), spec));     // 1,2 out of order
    CHECK_FALSE(has_minimal_right_crucial_form(perm({1, 4, 5, 2, 3}), spec));  // length 5, not 4
    for (const PatternSpec s : {PatternSpec(3, 3), PatternSpec(4, 3), PatternSpec(4, 4)}) {
        for (const auto& p : list_brute(s.k + s.l - 3, s, CrucialType::right)) {
            CHECK(has_minimal_right_crucial_form(p, s));
            const int first = p.word().front();
            CHECK((first == 1 || first == p.size()));
        }
        for (const auto& p : list_brute(s.k + 2 * s.l - 5, s, CrucialType::bicrucial)) {
            CHECK(has_minimal_bicrucial_form(p, s));
            if (s.k > s.l) {
                CHECK(p.word().front() == s.l - 1);
                CHECK(p.word().back() == s.k + s.l - 3);
            } else {
                // at k = l the complement family swaps the two endpoints
                const bool direct = p.word().front() == s.l - 1 && p.word().back() == s.k + s.l - 3;
                const bool flipped =
                    p.word().front() == s.k + s.l - 3 && p.word().back() == s.l - 1;
                CHECK((direct || flipped));
            }
        }
    }
}

TEST_CASE("endpoint witnesses and deletability up to length eight") {
    using crucial::deletability_ok;
    using crucial::endpoint_witness_ok;
    for (const PatternSpec spec :
         {PatternSpec(5, 3), PatternSpec(4, 4), PatternSpec(5, 4), PatternSpec(5, 5)}) {
        CHECK(endpoint_witness_ok(spec, 8));
        CHECK(deletability_ok(spec, 8));
    }
}

TEST_CASE("recording tableau corner shortcut on minimal tricrucial words") {
    // For the unique two-row insertion tableau at l = 3, top-cruciality of a
    // minimal word is exactly q(1,k-1) < q(2,2).
    for (int k = 4; k <= 5; ++k) {
        const PatternSpec spec(k, 3);
        for (const auto& p : list_brute(k + 1, spec, CrucialType::tricrucial)) {
            const TableauPair pair = rsk(p);
            CHECK(pair.Q.rows()[0][static_cast<size_t>(k) - 2] < pair.Q.rows()[1][1]);
        }
        for (const auto& p : list_brute(k + 1, spec, CrucialType::bicrucial)) {
            const TableauPair pair = rsk(p);
            const bool shortcut = pair.Q.rows()[0][static_cast<size_t>(k) - 2] < pair.Q.rows()[1][1];
            CHECK(shortcut == classify_direct(p, spec).tricrucial());
        }
    }
}
