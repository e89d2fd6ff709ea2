#include <doctest.h>

#include "balance/generate.hpp"
#include "balance/graph6.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace balance;

// Expected strings below were derived with oracle::graph6_reference before
// the writer existed; the cross-check keeps them honest.

TEST_CASE("known graph6 strings") {
    CHECK(oracle::graph6_reference(make_complete(4)) == "C~");
    CHECK(oracle::graph6_reference(make_cycle(5)) == "Dhc");
    CHECK(oracle::graph6_reference(make_complete(5)) == "D~{");

    CHECK(write_graph6(make_complete(4)) == "C~");
    CHECK(write_graph6(make_cycle(5)) == "Dhc");
    CHECK(write_graph6(make_complete(5)) == "D~{");
    CHECK(write_graph6(make_complete(1)) == "@");

    CHECK(parse_graph6("C~") == make_complete(4));
    CHECK(parse_graph6("Dhc") == make_cycle(5));
    CHECK(parse_graph6("D~{") == make_complete(5));
    CHECK(parse_graph6("@") == make_complete(1));
}

TEST_CASE("writer matches the reference encoder on the corpus") {
    for (const auto& [name, g] : corpus::full_corpus()) {
        if (g.vertex_count() > 62) continue;
        INFO(name);
        CHECK(write_graph6(g) == oracle::graph6_reference(g));
    }
}

TEST_CASE("round trips") {
    for (const auto& [name, g] : corpus::full_corpus()) {
        INFO(name);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("header and newline tolerance") {
    CHECK(parse_graph6(">>graph6<<C~") == make_complete(4));
    CHECK(parse_graph6("C~\n") == make_complete(4));
    CHECK(parse_graph6("C~\r\n") == make_complete(4));
}

TEST_CASE("extended vertex count form") {
    Graph big = make_cycle(100);
    std::string g6 = write_graph6(big);
    CHECK(g6.size() == (std::size_t)(4 + (100 * 99 / 2 + 5) / 6));
    CHECK((unsigned char)g6[0] == 126);
    CHECK(parse_graph6(g6) == big);
    CHECK(parse_graph6(write_graph6(make_cycle(63))) == make_cycle(63));
}

TEST_CASE("malformed graph6 inputs") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("C"), parse_error);        // truncated edge bytes
    CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);      // trailing garbage
    CHECK_THROWS_AS(parse_graph6("C\x01"), parse_error);    // non-printable byte
    CHECK_THROWS_AS(parse_graph6("?"), parse_error);        // empty graph
    CHECK_THROWS_AS(parse_graph6("~~???"), parse_error);    // 8-byte form
    CHECK_THROWS_AS(parse_graph6("~??@"), parse_error);     // non-canonical long form (n=1)

    // C5 needs 10 bits; the last 2 bits of "Dhc" are padding. Setting one of
    // them ('c'+1 = 'd' flips the lowest bit) must be rejected.
    CHECK_THROWS_AS(parse_graph6("Dhd"), parse_error);
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("3\n0 1\n1 2\n0 2\n") == make_complete(3));
    CHECK(parse_edge_list("2\n") == Graph(2));
    CHECK_THROWS_AS(parse_edge_list("2\n0 0\n"), parse_error);       // loop
    CHECK_THROWS_AS(parse_edge_list("4\n0 1\n0 1\n"), parse_error);  // duplicate
    CHECK_THROWS_AS(parse_edge_list("4\n0 4\n"), parse_error);       // out of range
    CHECK_THROWS_AS(parse_edge_list("0\n"), parse_error);            // empty graph
    CHECK_THROWS_AS(parse_edge_list("x\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3\n0\n"), parse_error);
}
