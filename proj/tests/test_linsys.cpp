#include <doctest.h>

#include "treeweights/linsys.hpp"

using namespace treeweights;

TEST_SUITE_BEGIN("linsys");

TEST_CASE("unique solution") {
    // x + y = 3, x - y = 1 -> (2, 1)
    const auto space = solve_exact({{1, 1}, {1, -1}}, {3, 1});
    REQUIRE(space.consistent);
    CHECK(space.null_basis.empty());
    CHECK(space.particular == std::vector<Rational>{2, 1});
    CHECK(has_positive_point(space));
    CHECK(positive_point(space) == std::vector<Rational>{2, 1});
}

TEST_CASE("inconsistent system") {
    const auto space = solve_exact({{1, 1}, {2, 2}}, {1, 3});
    CHECK_FALSE(space.consistent);
    CHECK_FALSE(has_positive_point(space));
    CHECK_FALSE(positive_point(space).has_value());
}

TEST_CASE("unique solution with a nonpositive entry") {
    const auto space = solve_exact({{1, 1}, {1, -1}}, {1, 3});
    REQUIRE(space.consistent);
    CHECK(space.particular == std::vector<Rational>{2, -1});
    CHECK_FALSE(has_positive_point(space));
}

TEST_CASE("one-dimensional family with a positive window") {
    // x + y = 2: positive points exist (0 < x < 2).
    const auto space = solve_exact({{1, 1}}, {2});
    REQUIRE(space.consistent);
    REQUIRE(space.null_basis.size() == 1);
    CHECK(has_positive_point(space));
    const auto point = positive_point(space);
    REQUIRE(point.has_value());
    CHECK((*point)[0] + (*point)[1] == 2);
    CHECK((*point)[0] > 0);
    CHECK((*point)[1] > 0);
    // Deterministic: the same call yields the same point.
    CHECK(positive_point(space) == point);
}

TEST_CASE("one-dimensional family with an empty positive window") {
    // x + y = 0 with x, y > 0 is impossible.
    const auto space = solve_exact({{1, 1}}, {0});
    REQUIRE(space.consistent);
    CHECK_FALSE(has_positive_point(space));
}

TEST_CASE("two free variables") {
    // x + y + z = 6, x,y,z > 0.
    const auto space = solve_exact({{1, 1, 1}}, {6});
    REQUIRE(space.consistent);
    CHECK(space.null_basis.size() == 2);
    CHECK(has_positive_point(space));
    const auto point = positive_point(space);
    REQUIRE(point.has_value());
    CHECK((*point)[0] + (*point)[1] + (*point)[2] == 6);
    for (const auto& x : *point) CHECK(x > 0);
}

TEST_SUITE_END();
