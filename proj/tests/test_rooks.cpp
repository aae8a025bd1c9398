#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "doctest.h"
#include "rookpart/partitions.hpp"
#include "rookpart/rooks.hpp"

using namespace rookpart;

namespace {

SetPartition sp(const std::string& text) { return SetPartition::parse(text); }

RookPlacement rp(int board, std::vector<Cell> ones) {
    return RookPlacement(board, std::move(ones));
}

}  // namespace

TEST_CASE("placement invariants are enforced") {
    CHECK_NOTHROW(rp(2, {{1, 2}}));
    CHECK_NOTHROW(rp(0, {}));
    CHECK(RookPlacement::unit().is_unit());
    CHECK_THROWS_AS(rp(2, {{2, 1}}), std::invalid_argument);   // below diagonal
    CHECK_THROWS_AS(rp(2, {{1, 3}}), std::invalid_argument);   // off board
    CHECK_THROWS_AS(rp(3, {{1, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(rp(3, {{1, 3}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(RookPlacement(-1, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("the five rooks on T_2") {
    CHECK(partition_to_rook(sp("1|2|3")) == rp(2, {}));
    CHECK(partition_to_rook(sp("12|3")) == rp(2, {{1, 1}}));
    CHECK(partition_to_rook(sp("13|2")) == rp(2, {{1, 2}}));
    CHECK(partition_to_rook(sp("1|23")) == rp(2, {{2, 2}}));
    CHECK(partition_to_rook(sp("123")) == rp(2, {{1, 1}, {2, 2}}));

    CHECK(rook_to_partition(rp(2, {{1, 1}})) == sp("12|3"));
    CHECK(rook_to_partition(rp(2, {{2, 2}})) == sp("1|23"));
    CHECK(rook_to_partition(RookPlacement::unit()) == SetPartition());
    CHECK(partition_to_rook(SetPartition()).is_unit());
}

TEST_CASE("bijection round trip, n <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const SetPartition& pi : enumerate_partitions(n))
            CHECK(rook_to_partition(partition_to_rook(pi)) == pi);
    for (int board = 0; board <= 5; ++board)
        for (const RookPlacement& rook : enumerate_rooks(board))
            CHECK(partition_to_rook(rook_to_partition(rook)) == rook);
}

TEST_CASE("enumerate_rooks counts are Bell(board+1)") {
    const std::int64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int board = 0; board <= 6; ++board) {
        auto rooks = enumerate_rooks(board);
        CHECK(static_cast<std::int64_t>(rooks.size()) == bell[board + 1]);
        std::set<RookPlacement> distinct(rooks.begin(), rooks.end());
        CHECK(distinct.size() == rooks.size());
    }
}

TEST_CASE("edsum") {
    CHECK(edsum(rp(0, {}), rp(1, {{1, 1}})) == rp(2, {{2, 2}}));
    CHECK(edsum(RookPlacement::unit(), rp(2, {{1, 2}})) == rp(2, {{1, 2}}));
    CHECK(edsum(rp(2, {{1, 2}}), RookPlacement::unit()) == rp(2, {{1, 2}}));
    CHECK(edsum(rp(1, {{1, 1}}), rp(1, {{1, 1}})) == rp(3, {{1, 1}, {3, 3}}));
    CHECK(rook_to_partition(rp(3, {{1, 1}, {3, 3}})) == sp("12|34"));
}

TEST_CASE("product compatibility with slash, a + b <= 8") {
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; a + b <= 8; ++b) {
            for (const SetPartition& pi : enumerate_partitions(a))
                for (const SetPartition& sigma : enumerate_partitions(b))
                    CHECK(partition_to_rook(slash(pi, sigma)) ==
                          edsum(partition_to_rook(pi), partition_to_rook(sigma)));
        }
    }
}

TEST_CASE("slash_decompositions matches slash_cuts") {
    CHECK(slash_decompositions(partition_to_rook(sp("1|23"))) == std::vector<int>{1});
    CHECK(slash_decompositions(partition_to_rook(sp("13|2"))).empty());
    CHECK(slash_decompositions(partition_to_rook(sp("1|2|3"))) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(slash_decompositions(RookPlacement::unit()), UnitRookError);
    for (int n = 1; n <= 7; ++n)
        for (const SetPartition& pi : enumerate_partitions(n))
            CHECK(slash_decompositions(partition_to_rook(pi)) == slash_cuts(pi));
}

TEST_CASE("extendability criterion on Figure-1 rooks") {
    CHECK_FALSE(is_extendable(rp(2, {})));
    CHECK_FALSE(is_extendable(rp(2, {{1, 1}})));
    CHECK(is_extendable(rp(2, {{1, 2}})));
    CHECK_FALSE(is_extendable(rp(2, {{2, 2}})));
    CHECK(is_extendable(rp(2, {{1, 1}, {2, 2}})));
    CHECK(is_extendable(rp(4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}})));
    CHECK_THROWS_AS(is_extendable(RookPlacement::unit()), UnitRookError);
    CHECK_THROWS_AS(is_extendable_bruteforce(RookPlacement::unit()), UnitRookError);
    CHECK_THROWS_AS(is_extendable_bruteforce(rp(9, {})), BoardTooLarge);
}

TEST_CASE("criterion agrees with the brute-force oracle, boards <= 6") {
    for (int board = 0; board <= 6; ++board)
        for (const RookPlacement& rook : enumerate_rooks(board))
            CHECK(is_extendable(rook) == is_extendable_bruteforce(rook));
}

TEST_CASE("extend produces a valid completion") {
    CHECK(extend(rp(2, {{1, 2}})).column_of == std::vector<int>{2, 1});
    CHECK(extend(rp(3, {{1, 1}, {2, 2}, {3, 3}})).column_of == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(extend(rp(2, {{1, 1}})), NotExtendable);
    try {
        extend(rp(2, {{1, 1}}));
    } catch (const NotExtendable& e) {
        CHECK(e.row == 2);
        CHECK(e.col == 2);
    }

    for (int board = 1; board <= 6; ++board) {
        for (const RookPlacement& rook : enumerate_rooks(board)) {
            if (!is_extendable(rook)) continue;
            PermutationMatrix p = extend(rook);
            std::set<int> cols(p.column_of.begin(), p.column_of.end());
            CHECK(static_cast<int>(cols.size()) == board);
            int below = 0;
            for (int i = 1; i <= board; ++i) {
                int j = p.column_of[i - 1];
                if (j >= i) {
                    CHECK(std::binary_search(rook.ones().begin(), rook.ones().end(),
                                             Cell{i, j}));
                } else {
                    ++below;
                }
            }
            // Added ones are exactly the r zero-row/zero-column pairs.
            CHECK(below == board - static_cast<int>(rook.ones().size()));
            for (const Cell& c : rook.ones()) CHECK(p.column_of[c.row - 1] == c.col);
        }
    }
}

TEST_CASE("theorem: extendable iff atomic, n <= 10") {
    for (int n = 1; n <= 10; ++n)
        for (const SetPartition& pi : enumerate_partitions(n))
            CHECK(is_extendable(partition_to_rook(pi)) == is_atomic(pi));
}

TEST_CASE("corollary: a one at (1, n) forces extendability, boards <= 6") {
    for (int board = 1; board <= 6; ++board) {
        for (const RookPlacement& rook : enumerate_rooks(board)) {
            bool corner = false;
            for (const Cell& c : rook.ones())
                if (c.row == 1 && c.col == board) corner = true;
            if (corner) CHECK(is_extendable(rook));
        }
    }
}

TEST_CASE("json and grid rendering") {
    RookPlacement rook = rp(2, {{1, 2}});
    CHECK(rook.to_json() == R"({"board":2,"ones":[[1,2]]})");
    CHECK(RookPlacement::from_json(rook.to_json()) == rook);
    CHECK(RookPlacement::from_json(R"({"board":-1,"ones":[]})").is_unit());
    CHECK(rook.to_grid() == ".1\n..\n");
    CHECK_THROWS(RookPlacement::from_json(R"({"board":2,"ones":[[2,1]]})"));

    for (int board = 0; board <= 4; ++board)
        for (const RookPlacement& r : enumerate_rooks(board))
            CHECK(RookPlacement::from_json(r.to_json()) == r);
}

TEST_CASE("rook algebra product") {
    auto a = RookAlgebraElement::basis(partition_to_rook(sp("13|2")));
    auto b = RookAlgebraElement::basis(partition_to_rook(sp("12")));
    CHECK(rook_product(a, b) ==
          RookAlgebraElement::basis(partition_to_rook(sp("13|2|45"))));
    CHECK(rook_product(RookAlgebraElement::one(), a) == a);
    CHECK(rook_product(a, RookAlgebraElement::one()) == a);

    RookAlgebraElement sum;
    sum.add(partition_to_rook(sp("1")), 2);
    sum.add(partition_to_rook(sp("12")), -1);
    RookAlgebraElement lhs = rook_product(sum, b);
    RookAlgebraElement expected;
    expected.add(partition_to_rook(slash(sp("1"), sp("12"))), 2);
    expected.add(partition_to_rook(slash(sp("12"), sp("12"))), -1);
    CHECK(lhs == expected);

    // Cancellation keeps the support free of zero coefficients.
    RookAlgebraElement z;
    z.add(partition_to_rook(sp("1")), 1);
    z.add(partition_to_rook(sp("1")), -1);
    CHECK(z == RookAlgebraElement());
}
