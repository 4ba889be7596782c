#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "kdiag/constructions.hpp"
#include "kdiag/core.hpp"
#include "test_util.hpp"

using namespace kdiag;

TEST_CASE("magic_sum matches k(kn-1)/2 and flags the parity gap") {
    CHECK(magic_sum(9, 3) == Value{39});
    CHECK(magic_sum(1, 1) == Value{0});
    CHECK(magic_sum(11, 5) == Value{135});
    CHECK(magic_sum(10, 6) == Value{177});
    CHECK_FALSE(magic_sum(4, 3).has_value());  // 3*11/2 is not an integer
    CHECK_FALSE(magic_sum(6, 5).has_value());
    CHECK(magic_sum(6, 4) == Value{46});

    CHECK_THROWS_AS(magic_sum(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(magic_sum(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(magic_sum(3, 4), std::invalid_argument);
}

TEST_CASE("diagonal_index is (col - row) mod n") {
    CHECK(diagonal_index({0, 6}, 9) == 6);
    CHECK(diagonal_index({8, 0}, 9) == 1);
    CHECK(diagonal_index({5, 5}, 9) == 0);
    CHECK_THROWS_AS(diagonal_index({9, 0}, 9), std::invalid_argument);
    CHECK_THROWS_AS(diagonal_index({0, -1}, 9), std::invalid_argument);
}

TEST_CASE("diagonal_index is constant along each broken diagonal") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const Cell c{static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
        const Cell succ{(c.row + 1) % n, (c.col + 1) % n};
        CHECK(diagonal_index(c, n) == diagonal_index(succ, n));
    }
}

TEST_CASE("SparseSquare rejects out-of-grid cells and double writes") {
    SparseSquare s(3, 2);
    s.set({0, 0}, 5);
    CHECK(s.at({0, 0}) == Value{5});
    CHECK_FALSE(s.at({1, 1}).has_value());
    CHECK_THROWS_AS(s.set({0, 0}, 6), std::logic_error);
    CHECK_THROWS_AS(s.set({3, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(s.set({0, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(SparseSquare(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(SparseSquare(3, -1), std::invalid_argument);
}

TEST_CASE("occupied_band finds plain, wrapped, and full bands") {
    SECTION("the k=3 reference grid occupies {6,7,8}") {
        const auto scan = occupied_band(testutil::reference_square(3));
        REQUIRE(scan.band.has_value());
        CHECK(scan.band->start == 6);
        CHECK(scan.band->width == 3);
        CHECK(scan.occupied == std::vector<int>{6, 7, 8});
    }
    SECTION("the k=7 reference grid wraps through diagonal 0") {
        const auto scan = occupied_band(testutil::reference_square(7));
        REQUIRE(scan.band.has_value());
        CHECK(scan.band->start == 6);
        CHECK(scan.band->width == 7);
        CHECK(scan.occupied == std::vector<int>{0, 1, 2, 3, 6, 7, 8});
    }
    SECTION("a full square reports the canonical start 0") {
        const auto scan = occupied_band(construct_k3(3));
        REQUIRE(scan.band.has_value());
        CHECK(*scan.band == DiagonalBand{3, 0, 3});
    }
    SECTION("a gap is a not-a-band failure listing the occupied set") {
        SparseSquare s(5, 2);
        s.set({0, 0}, 0);  // diagonal 0
        s.set({0, 2}, 1);  // diagonal 2
        const auto scan = occupied_band(s);
        CHECK_FALSE(scan.band.has_value());
        CHECK(scan.occupied == std::vector<int>{0, 2});
    }
    SECTION("width must equal k") {
        SparseSquare s(5, 3);
        s.set({0, 0}, 0);
        s.set({0, 1}, 1);  // two occupied diagonals, k=3
        CHECK_FALSE(occupied_band(s).band.has_value());
    }
}

TEST_CASE("DiagonalBand::contains handles wraparound") {
    const DiagonalBand band{9, 6, 7};  // 6,7,8,0,1,2,3
    for (int d : {6, 7, 8, 0, 1, 2, 3}) CHECK(band.contains(d));
    for (int d : {4, 5}) CHECK_FALSE(band.contains(d));
}

TEST_CASE("row_sums and col_sums") {
    SECTION("the k=4 reference grid sums to 70 per line") {
        const auto grid = testutil::reference_square(4);
        for (Value s : row_sums(grid)) CHECK(s == 70);
        for (Value s : col_sums(grid)) CHECK(s == 70);
    }
    SECTION("order-1 square sums to [0]") {
        CHECK(row_sums(construct_trivial()) == std::vector<Value>{0});
        CHECK(col_sums(construct_trivial()) == std::vector<Value>{0});
    }
    SECTION("the k=7 reference grid sums to 217 per line") {
        const auto grid = testutil::reference_square(7);
        for (Value s : row_sums(grid)) CHECK(s == 217);
        for (Value s : col_sums(grid)) CHECK(s == 217);
    }
}

TEST_CASE("verify passes every transcribed reference grid") {
    for (int k = 3; k <= 7; ++k) {
        const auto rep = verify(testutil::reference_square(k));
        INFO("reference k=" << k);
        CHECK(rep.passed());
    }
    const auto rep = verify(testutil::reference_square(5));
    CHECK(rep.magic_sum == Value{135});
    REQUIRE(rep.band.has_value());
    CHECK(rep.band->start == 1);
}

TEST_CASE("verify reports a corrupted value set without short-circuiting") {
    // the k=6 grid with its 0 (at cell (0,1)) replaced by 60
    const auto grid = testutil::reference_square(6);
    SparseSquare mutated(grid.order(), grid.k());
    for (const auto& [c, v] : grid.entries()) mutated.set(c, v == 0 ? 60 : v);

    const auto rep = verify(mutated);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.value_set_ok.ok);
    CHECK(rep.value_set_ok.detail == "value 60 outside [0, 60)");
    CHECK_FALSE(rep.row_sum_ok.ok);
    CHECK_FALSE(rep.col_sum_ok.ok);
    // untouched structure still passes its checks
    CHECK(rep.row_count_ok.ok);
    CHECK(rep.col_count_ok.ok);
    CHECK(rep.band_ok.ok);
}

TEST_CASE("verify names duplicates, bad counts, and order violations") {
    SECTION("duplicate value") {
        SparseSquare s(1, 1);
        s.set({0, 0}, 0);
        auto rep = verify(s);
        CHECK(rep.passed());

        SparseSquare dup(2, 2);  // (2,2) cannot exist; duplicate 1 on top
        dup.set({0, 0}, 1);
        dup.set({0, 1}, 1);
        dup.set({1, 0}, 2);
        dup.set({1, 1}, 0);
        rep = verify(dup);
        CHECK(rep.value_set_ok.detail == "duplicate value 1");
    }
    SECTION("row count counterexample names the first bad row") {
        SparseSquare s(2, 1);
        s.set({0, 0}, 0);
        s.set({0, 1}, 1);
        const auto rep = verify(s);
        CHECK_FALSE(rep.row_count_ok.ok);
        CHECK(rep.row_count_ok.detail == "row 0 has 2 filled cells, expected 1");
        CHECK(rep.col_count_ok.ok);  // both columns do hold one cell each
    }
    SECTION("k outside [1, n] fails the order check") {
        const SparseSquare s(3, 7);
        const auto rep = verify(s);
        CHECK_FALSE(rep.order_ok.ok);
        CHECK_FALSE(rep.passed());
    }
    SECTION("parity-infeasible candidates get no magic sum") {
        const SparseSquare s(4, 3);
        const auto rep = verify(s);
        CHECK_FALSE(rep.row_sum_ok.ok);
        CHECK_FALSE(rep.col_sum_ok.ok);
        CHECK_FALSE(rep.magic_sum.has_value());
    }
}

TEST_CASE("a passing square's values total n times the magic sum") {
    for (int k = 3; k <= 7; ++k) {
        const auto grid = testutil::reference_square(k);
        const auto rep = verify(grid);
        REQUIRE(rep.passed());
        const Value total = std::accumulate(
            grid.entries().begin(), grid.entries().end(), Value{0},
            [](Value acc, const auto& e) { return acc + e.second; });
        CHECK(total == static_cast<Value>(grid.order()) * *rep.magic_sum);
    }
}

TEST_CASE("verify is pure") {
    const auto grid = testutil::reference_square(3);
    const auto a = verify(grid);
    const auto b = verify(grid);
    CHECK(a.passed() == b.passed());
    CHECK(a.magic_sum == b.magic_sum);
    CHECK(a.band == b.band);
    CHECK(a.value_set_ok.detail == b.value_set_ok.detail);
}
