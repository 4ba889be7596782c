#include <catch2/catch_amalgamated.hpp>

#include "kdiag/compose.hpp"
#include "kdiag/io.hpp"
#include "test_util.hpp"

using namespace kdiag;

TEST_CASE("reference fixtures carry the transcription checksums") {
    // frozen over the raw fixture bytes; any drift in a transcribed grid is
    // a test failure, not a silent re-baseline
    const std::pair<int, std::uint64_t> frozen[] = {
        {3, 0x91205fdd4e3b5789ULL},
        {4, 0x0d1a27276108749dULL},
        {5, 0xce15a27136fe9933ULL},
        {6, 0xd62e43666b00c86dULL},
        {7, 0x2e2ceeaa02317ed3ULL},
    };
    for (const auto& [k, checksum] : frozen) {
        INFO("reference k=" << k);
        CHECK(testutil::fnv1a64(testutil::read_file(
                  testutil::fixture_path(testutil::reference_name(k)))) == checksum);
    }
}

TEST_CASE("every reference fixture decodes and verifies") {
    const Value sums[] = {39, 70, 135, 177, 217};
    for (int k = 3; k <= 7; ++k) {
        const auto grid = testutil::reference_square(k);
        const auto rep = verify(grid);
        INFO("reference k=" << k);
        CHECK(rep.passed());
        CHECK(rep.magic_sum == sums[k - 3]);
    }
}

TEST_CASE("JSON and CSV round-trip the reference grids exactly") {
    for (int k = 3; k <= 7; ++k) {
        const auto grid = testutil::reference_square(k);
        INFO("reference k=" << k);
        CHECK(decode_json(encode_json(grid)) == grid);
        CHECK(decode_csv(encode_csv(grid)) == grid);
    }
}

TEST_CASE("CSV encoding is byte-identical to the fixture files") {
    for (int k = 3; k <= 7; ++k) {
        const auto raw =
            testutil::read_file(testutil::fixture_path(testutil::reference_name(k)));
        INFO("reference k=" << k);
        CHECK(encode_csv(decode_csv(raw)) == raw);
    }
}

TEST_CASE("the trivial square's JSON document is pinned") {
    CHECK(encode_json(construct_trivial()) ==
          R"({"cells":[{"col":0,"row":0,"value":0}],"k":1,"n":1})");
}

TEST_CASE("round-trips hold for generated squares") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{9, 7}, {12, 10}, {15, 15}}) {
        const auto result = generate(n, k);
        REQUIRE(std::holds_alternative<SparseSquare>(result));
        const auto& s = std::get<SparseSquare>(result);
        CHECK(decode_json(encode_json(s)) == s);
        CHECK(decode_csv(encode_csv(s)) == s);
    }
}

TEST_CASE("ASCII rendering reproduces the k=3 reference layout cell for cell") {
    const std::string expected =
        "                   4 18 17\n"
        "12                    8 19\n"
        "20 16                    3\n"
        " 7 21 11                  \n"
        "    2 22 15               \n"
        "       6 23 10            \n"
        "          1 24 14         \n"
        "             5 25  9      \n"
        "                0 26 13   \n";
    CHECK(render_ascii(testutil::reference_square(3)) == expected);
}

TEST_CASE("JSON decoding rejects structural garbage") {
    CHECK_THROWS_AS(decode_json("not json at all"), ParseError);
    CHECK_THROWS_AS(decode_json("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(decode_json(R"({"k":1,"cells":[]})"), ParseError);             // missing n
    CHECK_THROWS_AS(decode_json(R"({"n":0,"k":1,"cells":[]})"), ParseError);       // n < 1
    CHECK_THROWS_AS(decode_json(R"({"n":1,"k":1,"cells":7})"), ParseError);        // bad cells
    CHECK_THROWS_AS(decode_json(R"({"n":1,"k":1,"cells":[{"row":0,"col":1,"value":0}]})"),
                    ParseError);  // cell outside the grid
    CHECK_THROWS_AS(
        decode_json(
            R"({"n":2,"k":1,"cells":[{"row":0,"col":0,"value":0},{"row":0,"col":0,"value":1}]})"),
        ParseError);  // duplicate cell
    CHECK_THROWS_AS(decode_json(R"({"n":1,"k":1,"cells":[{"row":0,"col":0,"value":0.5}]})"),
                    ParseError);  // non-integer value
}

TEST_CASE("CSV decoding rejects structural garbage") {
    CHECK_THROWS_AS(decode_csv(""), ParseError);
    CHECK_THROWS_AS(decode_csv("k=1,n=1\n\n"), ParseError);       // header order is fixed
    CHECK_THROWS_AS(decode_csv("n=2,k=1\n0,\n"), ParseError);     // missing row
    CHECK_THROWS_AS(decode_csv("n=2,k=1\n0,,\n,1\n"), ParseError);  // too many fields
    CHECK_THROWS_AS(decode_csv("n=2,k=1\n0,x\n,1\n"), ParseError);  // non-integer field
    CHECK_THROWS_AS(decode_csv("n=2,k=1\n0,\n,1\nstray\n"), ParseError);
    CHECK_THROWS_AS(decode_csv("n=0,k=1\n"), ParseError);
}

TEST_CASE("structural violations of the definition decode fine and fail verify") {
    // k > n is representable; it is verify's job to flag it
    const auto s = decode_json(R"({"n":2,"k":5,"cells":[{"row":0,"col":0,"value":0}]})");
    CHECK(s.k() == 5);
    const auto rep = verify(s);
    CHECK_FALSE(rep.order_ok.ok);
    CHECK_FALSE(rep.passed());

    // an empty cell list with n = k = 1 is a row-count failure, not a parse error
    const auto empty = decode_json(R"({"n":1,"k":1,"cells":[]})");
    const auto empty_rep = verify(empty);
    CHECK_FALSE(empty_rep.row_count_ok.ok);
    CHECK_FALSE(empty_rep.passed());
}

TEST_CASE("negative and large values survive the round trip") {
    SparseSquare s(2, 1);
    s.set({0, 1}, -7);
    s.set({1, 0}, 999999999999LL);
    CHECK(decode_json(encode_json(s)) == s);
    CHECK(decode_csv(encode_csv(s)) == s);
}

TEST_CASE("values past the decode ceiling are parse errors, not overflows") {
    CHECK_THROWS_AS(decode_json(R"({"n":1,"k":1,"cells":[{"row":0,"col":0,"value":9000000000000}]})"),
                    ParseError);
    CHECK_THROWS_AS(decode_csv("n=1,k=1\n-9000000000000\n"), ParseError);
    CHECK_THROWS_AS(decode_csv("n=1,k=1\n99999999999999999999999\n"), ParseError);
}
