#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "crucial/tableau.hpp"
#include "oracles.hpp"

using namespace crucial;

namespace {

using Rows = std::vector<std::vector<int>>;

StandardTableau tab(Rows rows) { return StandardTableau(std::move(rows)); }

}  // namespace

TEST_CASE("shape validation and helpers") {
    CHECK_NOTHROW(YoungShape({3, 2, 2}));
    CHECK_THROWS_AS(YoungShape({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(YoungShape({2, 0}), std::invalid_argument);
    CHECK(YoungShape({4, 2, 1}).size() == 7);
    CHECK(YoungShape({4, 2, 1}).rows() == 3);
    CHECK(YoungShape({4, 2, 1}).cols() == 4);
    CHECK(YoungShape({4, 2, 1}).conjugate() == YoungShape({3, 2, 1, 1}));
    CHECK(YoungShape::rectangle(2, 3) == YoungShape({3, 3}));
    CHECK(YoungShape::rectangle(0, 5) == YoungShape());
}

TEST_CASE("standard tableau validation") {
    CHECK_NOTHROW(tab({{1, 2, 3}, {4, 5}}));
    CHECK_THROWS_AS(tab({{1, 3}, {2, 2}}), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(tab({{2, 3}, {4, 5}}), std::invalid_argument);   // not 1..n
    CHECK_THROWS_AS(tab({{1, 4}, {3, 2}}), std::invalid_argument);   // row not increasing
    CHECK_THROWS_AS(tab({{1, 2}, {3, 4, 5}}), std::invalid_argument);  // not a partition
    CHECK_THROWS_AS(tab({{3, 4}, {1, 2}}), std::invalid_argument);   // column not increasing
    CHECK(tab({{1, 2}, {3, 4}}).shape() == YoungShape({2, 2}));
}

TEST_CASE("row insertion") {
    CHECK(row_insert({{1, 3, 4}}, 5) == Rows{{1, 3, 4, 5}});
    CHECK(row_insert({{1, 3, 4}}, 2) == Rows{{1, 2, 4}, {3}});
    CHECK(row_insert({}, 1) == Rows{{1}});
    CHECK_THROWS_AS(row_insert({{1, 3, 4}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(row_insert({{3, 1}}, 2), std::invalid_argument);
}

TEST_CASE("rsk on fixed words") {
    const TableauPair id = rsk(Permutation::identity(4));
    CHECK(id.P == tab({{1, 2, 3, 4}}));
    CHECK(id.Q == tab({{1, 2, 3, 4}}));

    const TableauPair desc = rsk(Permutation({3, 2, 1}));
    CHECK(desc.P == tab({{1}, {2}, {3}}));
    CHECK(desc.Q == tab({{1}, {2}, {3}}));

    const TableauPair mixed = rsk(Permutation({1, 4, 5, 2, 3}));
    CHECK(mixed.P == tab({{1, 2, 3}, {4, 5}}));
    CHECK(mixed.Q == tab({{1, 2, 3}, {4, 5}}));

    CHECK(rsk(Permutation()).P == StandardTableau());
}

TEST_CASE("rsk shape tracks the longest monotone subsequences") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : oracles::all_perms(n)) {
            const TableauPair pair = rsk(p);
            CHECK(pair.P.shape() == pair.Q.shape());
            CHECK(pair.P.shape().cols() == longest_increasing_len(p));
            CHECK(pair.P.shape().rows() == longest_decreasing_len(p));
        }
}

TEST_CASE("rsk round trip on all short permutations") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracles::all_perms(n)) CHECK(rsk_inverse(rsk(p)) == p);
}

TEST_CASE("rsk_inverse on the five pairs sharing one insertion tableau") {
    const StandardTableau p = tab({{1, 2, 3}, {4, 5}});
    std::set<std::vector<int>> words;
    for (const auto& q : enumerate_syt(YoungShape({3, 2})))
        words.insert(rsk_inverse(TableauPair{p, q}).word());
    const std::set<std::vector<int>> expected = {{1, 4, 5, 2, 3},
                                                 {1, 4, 2, 5, 3},
                                                 {4, 5, 1, 2, 3},
                                                 {4, 1, 2, 5, 3},
                                                 {4, 1, 5, 2, 3}};
    CHECK(words == expected);
}

TEST_CASE("rsk_inverse rejects bad pairs") {
    const StandardTableau a = tab({{1, 2}, {3, 4}});
    const StandardTableau b = tab({{1, 2, 3}, {4, 5}});
    CHECK_THROWS_AS(rsk_inverse(TableauPair{a, b}), std::invalid_argument);
    TableauPair broken{StandardTableau::unchecked({{2, 1}}), StandardTableau::unchecked({{2, 1}})};
    CHECK_THROWS_AS(rsk_inverse(broken), std::invalid_argument);
}

TEST_CASE("round trip through pairs of every shape") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& shape : enumerate_shapes(n, n, n, false)) {
            const auto tableaux = enumerate_syt(shape);
            for (const auto& p : tableaux)
                for (const auto& q : tableaux) {
                    const TableauPair pair{p, q};
                    CHECK(rsk(rsk_inverse(pair)) == pair);
                }
        }
}

TEST_CASE("transpose") {
    CHECK(transpose(tab({{1, 2, 3}})) == tab({{1}, {2}, {3}}));
    CHECK(transpose(tab({{1, 2}, {3, 4}})) == tab({{1, 3}, {2, 4}}));
    for (const auto& shape : enumerate_shapes(6, 6, 6, false))
        for (const auto& t : enumerate_syt(shape)) CHECK(transpose(transpose(t)) == t);
}

TEST_CASE("evacuation fixes single rows and is an involution") {
    CHECK(evacuation(tab({{1, 2, 3, 4}})) == tab({{1, 2, 3, 4}}));
    CHECK(evacuation(StandardTableau()) == StandardTableau());
    for (int n = 0; n <= 7; ++n)
        for (const auto& shape : enumerate_shapes(n, n, n, false))
            for (const auto& t : enumerate_syt(shape)) {
                const StandardTableau e = evacuation(t);
                CHECK(e.shape() == t.shape());
                CHECK(evacuation(e) == t);
            }
}

TEST_CASE("tableaux of the reverse, inverse and complement") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracles::all_perms(n)) {
            const TableauPair pq = rsk(p);
            const TableauPair rev = rsk(reverse(p));
            CHECK(rev.P == transpose(pq.P));
            CHECK(rev.Q == transpose(evacuation(pq.Q)));
            const TableauPair inv = rsk(inverse(p));
            CHECK(inv.P == pq.Q);
            CHECK(inv.Q == pq.P);
            const TableauPair comp = rsk(complement(p));
            CHECK(comp.P == transpose(evacuation(pq.P)));
            CHECK(comp.Q == transpose(pq.Q));
        }
}

TEST_CASE("hook length counts") {
    CHECK(hook_length_count(YoungShape({2, 2})) == 2);
    CHECK(hook_length_count(YoungShape({3, 1})) == 3);
    CHECK(hook_length_count(YoungShape({5})) == 1);
    CHECK(hook_length_count(YoungShape()) == 1);
    CHECK(hook_length_count(YoungShape::rectangle(3, 3)) == 42);
    CHECK(hook_length_count(YoungShape::rectangle(2, 2)) == 2);
}

TEST_CASE("squared hook counts over all shapes of n sum to n!") {
    for (int n = 0; n <= 8; ++n) {
        BigInt sum = 0;
        for (const auto& shape : enumerate_shapes(n, n, n, false)) {
            const BigInt f = hook_length_count(shape);
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("syt enumeration agrees with the hook counts") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& shape : enumerate_shapes(n, n, n, false)) {
            const auto tableaux = enumerate_syt(shape);
            CHECK(BigInt(tableaux.size()) == hook_length_count(shape));
            for (const auto& t : tableaux) CHECK(t.shape() == shape);
        }
}

TEST_CASE("syt enumeration order is strictly increasing row-major words") {
    CHECK(enumerate_syt(YoungShape({2, 2})) ==
          std::vector<StandardTableau>{tab({{1, 2}, {3, 4}}), tab({{1, 3}, {2, 4}})});
    CHECK(enumerate_syt(YoungShape({3, 1})).size() == 3);
    for (const auto& shape : enumerate_shapes(7, 7, 7, false)) {
        const auto tableaux = enumerate_syt(shape);
        for (size_t i = 1; i < tableaux.size(); ++i) CHECK(tableaux[i - 1].rows() < tableaux[i].rows());
    }
}

TEST_CASE("shape enumeration with bounds") {
    CHECK(enumerate_shapes(5, 3, 2, true) == std::vector<YoungShape>{YoungShape({3, 2})});
    CHECK(enumerate_shapes(7, 3, 3, true) ==
          std::vector<YoungShape>{YoungShape({3, 3, 1}), YoungShape({3, 2, 2})});
    CHECK(enumerate_shapes(5, 3, 1, true).empty());
    CHECK(enumerate_shapes(0, 0, 0, true) == std::vector<YoungShape>{YoungShape()});

    // against a plain partition generator
    for (int n = 0; n <= 10; ++n) {
        const auto everything = oracles::all_partitions_brute(n);
        for (int max_cols = 0; max_cols <= n; ++max_cols)
            for (int max_rows = 0; max_rows <= n; ++max_rows) {
                std::vector<YoungShape> expected;
                for (const auto& parts : everything) {
                    if (static_cast<int>(parts.size()) > max_rows) continue;
                    if (!parts.empty() && parts[0] > max_cols) continue;
                    expected.push_back(YoungShape(parts));
                }
                CHECK(enumerate_shapes(n, max_cols, max_rows, false) == expected);
            }
    }
}

TEST_CASE("full shapes are the bounded shapes hitting both bounds") {
    for (int n = 1; n <= 9; ++n)
        for (int max_cols = 1; max_cols <= 5; ++max_cols)
            for (int max_rows = 1; max_rows <= 5; ++max_rows) {
                std::vector<YoungShape> expected;
                for (const auto& shape : enumerate_shapes(n, max_cols, max_rows, false))
                    if (shape.cols() == max_cols && shape.rows() == max_rows)
                        expected.push_back(shape);
                CHECK(enumerate_shapes(n, max_cols, max_rows, true) == expected);
            }
}
