#include <doctest.h>

#include "generators.hpp"
#include "treeweights/io.hpp"

using namespace treeweights;

TEST_SUITE_BEGIN("io");

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(format_rational(Rational(3, 2)) == "3/2");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(format_rational(Rational(-4, 6)) == "-2/3");

    // Decimal input converts exactly, never rounded.
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("3.25") == Rational(13, 4));
    CHECK(parse_rational("-0.1") == Rational(-1, 10));

    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("2."), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), ParseError);
}

TEST_CASE("tree documents round-trip") {
    testgen::Rng rng(2201);
    for (int round = 0; round < 20; ++round) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const auto tree = testgen::random_reduced_tree(rng, n);
        const std::string doc = serialize_tree(tree);
        const auto parsed = parse_tree(doc);
        CHECK(serialize_tree(parsed) == doc);
        CHECK(parsed.canonical_string() == tree.canonical_string());
    }
}

TEST_CASE("family documents round-trip") {
    testgen::Rng rng(2202);
    for (int round = 0; round < 20; ++round) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const auto tree = testgen::random_reduced_tree(rng, n);
        const int k = 2 + static_cast<int>(rng() % (n - 1));
        const auto fam = all_k_weights(tree, k);
        const std::string doc = serialize_family(fam);
        const auto parsed = parse_family(doc);
        CHECK(parsed == fam);
        CHECK(serialize_family(parsed) == doc);
    }
}

TEST_CASE("topology documents round-trip and accept weighted edges") {
    const Topology topo({1, 2, 3, 4, 5, 6},
                        {Edge(1, 5), Edge(2, 5), Edge(5, 6), Edge(3, 6), Edge(4, 6)},
                        {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    const std::string doc = serialize_topology(topo);
    const auto parsed = parse_topology(doc);
    CHECK(serialize_topology(parsed) == doc);
    CHECK(parsed.canonical_string() == topo.canonical_string());

    // A weighted tree document parses as its topology.
    testgen::Rng rng(2203);
    const auto tree = testgen::random_leaf_only_tree(rng, 5);
    const auto from_tree = parse_topology(serialize_tree(tree));
    CHECK(from_tree.canonical_string() == Topology::of(tree).canonical_string());
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(parse_tree("not json"), ParseError);
    CHECK_THROWS_AS(parse_tree("{}"), ParseError);
    CHECK_THROWS_AS(parse_tree(R"({"edges": [[1, 2]], "labels": {"1": 1}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_family(R"({"n": 3, "k": 2, "weights": {}})"), ParseError);
    CHECK_THROWS_AS(
        parse_family(
            R"({"n": 3, "k": 2, "weights": {"1,2": "1", "1,3": "1", "2,3": "0"}})"),
        ParseError);
    CHECK_THROWS_AS(parse_topology(R"({"edges": [[1, 9], [9, 2]],
                                       "labels": {"1": 1, "2": 2}})"),
                    ParseError);
    CHECK_THROWS_AS(read_file("/nonexistent/path.json"), ParseError);
}

TEST_SUITE_END();
