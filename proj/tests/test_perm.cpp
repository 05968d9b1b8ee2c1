#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "crucial/perm.hpp"
#include "oracles.hpp"

using namespace crucial;

namespace {

Permutation perm(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

}  // namespace

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(perm({2, 5, 4, 1, 3}));
    CHECK_NOTHROW(Permutation());
    CHECK_THROWS_AS(perm({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(perm({1, 3}), std::invalid_argument);
    CHECK(Permutation::identity(4) == perm({1, 2, 3, 4}));
}

TEST_CASE("pattern spec bounds") {
    CHECK_NOTHROW(PatternSpec(2, 2));
    CHECK_THROWS_AS(PatternSpec(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec(3, 1), std::invalid_argument);
    CHECK(PatternSpec(4, 3).swapped() == PatternSpec(3, 4));
}

TEST_CASE("reduce") {
    const int raw[] = {3, 8, 2, 6};
    CHECK(reduce(raw) == perm({2, 4, 1, 3}));
    CHECK(reduce(std::span<const int>{}) == Permutation());
    const int sorted[] = {1, 2, 3};
    CHECK(reduce(sorted) == perm({1, 2, 3}));
    const int dup[] = {2, 2};
    CHECK_THROWS_AS(reduce(dup), std::invalid_argument);
}

TEST_CASE("reverse, complement, inverse on fixed words") {
    CHECK(reverse(perm({2, 4, 1, 3})) == perm({3, 1, 4, 2}));
    CHECK(reverse(Permutation()) == Permutation());
    CHECK(complement(perm({2, 5, 4, 1, 3})) == perm({4, 1, 2, 5, 3}));
    CHECK(complement(perm({1})) == perm({1}));
    CHECK(inverse(perm({3, 1, 2})) == perm({2, 3, 1}));
    CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
}

TEST_CASE("symmetries are involutions and commute") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation p = oracles::random_perm(rng, 1 + trial % 12);
        CHECK(reverse(reverse(p)) == p);
        CHECK(complement(complement(p)) == p);
        CHECK(inverse(inverse(p)) == p);
        CHECK(complement(reverse(p)) == reverse(complement(p)));
    }
}

TEST_CASE("extensions on fixed words") {
    CHECK(extend_right(perm({2, 3, 1}), 2) == perm({3, 4, 1, 2}));
    CHECK(extend_right(Permutation(), 1) == perm({1}));
    CHECK(extend_right(perm({1, 2}), 3) == perm({1, 2, 3}));
    CHECK(extend_left(perm({2, 3, 1}), 2) == perm({2, 3, 4, 1}));
    CHECK(extend_above(perm({2, 1}), 1) == perm({3, 2, 1}));
    CHECK(extend_below(perm({2, 1}), 3) == perm({3, 2, 1}));

    CHECK_THROWS_AS(extend_right(perm({2, 1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(extend_right(perm({2, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(extend_left(perm({2, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(extend_above(perm({2, 1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(extend_below(perm({2, 1}), 4), std::invalid_argument);
}

TEST_CASE("extensions restrict back to the original") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = trial % 9;
        const Permutation p = oracles::random_perm(rng, n);
        for (int i = 1; i <= n + 1; ++i) {
            const auto right = extend_right(p, i).word();
            CHECK(reduce(std::span(right.data(), right.size() - 1)) == p);
            const auto left = extend_left(p, i).word();
            CHECK(reduce(std::span(left.data() + 1, left.size() - 1)) == p);
            const auto above = extend_above(p, i).word();
            std::vector<int> rest;
            for (int v : above)
                if (v != n + 1) rest.push_back(v);
            CHECK(reduce(rest) == p);
            const auto below = extend_below(p, i).word();
            rest.clear();
            for (int v : below)
                if (v != 1) rest.push_back(v);
            CHECK(reduce(rest) == p);
        }
    }
}

TEST_CASE("insert and remove elements") {
    CHECK(insert_element(perm({2, 3, 1}), 4, 2) == perm({3, 4, 1, 2}));
    CHECK(insert_element(perm({2, 3, 1}), 1, 4) == perm({4, 2, 3, 1}));
    CHECK(remove_element(perm({3, 4, 1, 2}), 4) == perm({2, 3, 1}));
    CHECK_THROWS_AS(remove_element(perm({1}), 2), std::invalid_argument);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 8;
        const Permutation p = oracles::random_perm(rng, n);
        for (int pos = 1; pos <= n + 1; ++pos)
            for (int v = 1; v <= n + 1; ++v)
                CHECK(remove_element(insert_element(p, pos, v), pos) == p);
    }
}

TEST_CASE("longest monotone lengths on fixed words") {
    const Permutation p = perm({5, 2, 6, 4, 1, 3});
    CHECK(longest_increasing_len(p) == 2);
    CHECK(longest_decreasing_len(p) == 3);
    CHECK(longest_increasing_len(Permutation::identity(6)) == 6);
    CHECK(longest_decreasing_len(Permutation::identity(6)) == 1);
    CHECK(longest_increasing_len(Permutation()) == 0);
}

TEST_CASE("longest monotone lengths match the subsequence-scan oracle") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracles::all_perms(n)) {
            CHECK(longest_increasing_len(p) == oracles::lis_brute(p.span()));
            CHECK(longest_decreasing_len(p) == oracles::lds_brute(p.span()));
        }
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        const Permutation p = oracles::random_perm(rng, 10);
        CHECK(longest_increasing_len(p) == oracles::lis_brute(p.span()));
        CHECK(longest_decreasing_len(p) == oracles::lds_brute(p.span()));
    }
}

TEST_CASE("monotone lengths transform under the symmetries") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const Permutation p = oracles::random_perm(rng, trial % 11);
        CHECK(longest_increasing_len(reverse(p)) == longest_decreasing_len(p));
        CHECK(longest_increasing_len(inverse(p)) == longest_increasing_len(p));
        CHECK(longest_decreasing_len(inverse(p)) == longest_decreasing_len(p));
    }
}

TEST_CASE("avoidance") {
    CHECK(avoids(perm({5, 2, 6, 4, 1, 3}), PatternSpec(3, 4)));
    CHECK_FALSE(avoids(Permutation::identity(4), PatternSpec(4, 2)));
    CHECK_FALSE(avoids(Permutation::identity(4), PatternSpec(4, 5)));
    CHECK(avoids(Permutation(), PatternSpec(2, 2)));
}

TEST_CASE("no permutation longer than (k-1)(l-1) avoids") {
    for (int k = 2; k <= 4; ++k)
        for (int l = 2; l <= 3; ++l) {
            const PatternSpec spec(k, l);
            const int n = (k - 1) * (l - 1) + 1;
            for (const auto& p : oracles::all_perms(n)) CHECK_FALSE(avoids(p, spec));
        }
}
