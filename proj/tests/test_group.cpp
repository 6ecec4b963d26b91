#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/group.hpp"
#include "test_util.hpp"

using namespace cayley;

TEST_CASE("group construction") {
    const AbelianGroup c4({4});
    CHECK(c4.order() == 4);
    CHECK(c4.exponent() == 4);

    const AbelianGroup klein({2, 2});
    CHECK(klein.order() == 4);
    CHECK(klein.exponent() == 2);

    const AbelianGroup g({4, 6});
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(g.rank() == 2);
}

TEST_CASE("factors below 2 are rejected") {
    CHECK_THROWS_AS(AbelianGroup({1}), invalid_group_error);
    CHECK_THROWS_AS(AbelianGroup({4, 1}), invalid_group_error);
    CHECK_THROWS_AS(AbelianGroup({0}), invalid_group_error);
    CHECK_THROWS_AS(AbelianGroup({-2}), invalid_group_error);
    CHECK_THROWS_AS(AbelianGroup({}), invalid_group_error);
}

TEST_CASE("group order overflow is rejected") {
    CHECK_THROWS_AS(AbelianGroup(std::vector<std::int64_t>(63, std::int64_t{2} << 30)),
                    invalid_group_error);
}

TEST_CASE("iteration order is row-major with the last coordinate fastest") {
    const AbelianGroup g({4, 6});
    CHECK(g.element_at(0).coords == std::vector<std::int64_t>{0, 0});
    CHECK(g.element_at(1).coords == std::vector<std::int64_t>{0, 1});
    CHECK(g.element_at(5).coords == std::vector<std::int64_t>{0, 5});
    CHECK(g.element_at(6).coords == std::vector<std::int64_t>{1, 0});
    CHECK(g.element_at(23).coords == std::vector<std::int64_t>{3, 5});
    for (std::int64_t i = 0; i < g.order(); ++i)
        CHECK(g.index_of(g.element_at(i)) == i);
    CHECK_THROWS_AS(g.element_at(24), precondition_error);
    CHECK_THROWS_AS(g.element_at(-1), precondition_error);
}

TEST_CASE("element arithmetic") {
    const AbelianGroup g({4, 6});
    CHECK(add(g, make_element(g, {3, 5}), make_element(g, {1, 1})) == g.zero());
    CHECK(scalar_mul(g, 5, make_element(g, {1, 1})) == make_element(g, {1, 5}));
    CHECK(scalar_mul(g, 5, make_element(g, {1, 1})) ==
          testutil::multiple_by_repeated_addition(g, 5, make_element(g, {1, 1})));

    const AbelianGroup c5({5});
    CHECK(neg(c5, make_element(c5, {2})) == make_element(c5, {3}));

    CHECK_THROWS_AS(add(g, make_element(g, {0, 0}), GroupElement{{1}}), precondition_error);
}

TEST_CASE("make_element reduces raw coordinates") {
    const AbelianGroup g({4, 6});
    CHECK(make_element(g, {-1, 7}) == make_element(g, {3, 1}));
    CHECK_THROWS_AS(make_element(g, {1}), precondition_error);
}

TEST_CASE("element order") {
    const AbelianGroup c4({4});
    CHECK(element_order(c4, make_element(c4, {2})) == 2);
    const AbelianGroup g({4, 6});
    CHECK(element_order(g, make_element(g, {1, 2})) == 12);
    CHECK(testutil::order_by_repeated_addition(g, make_element(g, {1, 2})) == 12);
    const AbelianGroup c7({7});
    CHECK(element_order(c7, c7.zero()) == 1);
}

TEST_CASE("group and element text round trips") {
    const AbelianGroup g = parse_group("4,6");
    CHECK(g.factors() == std::vector<std::int64_t>{4, 6});
    CHECK(to_string(g) == "4,6");

    const GroupElement x = parse_element(g, "1:0");
    CHECK(x.coords == std::vector<std::int64_t>{1, 0});
    CHECK(to_string(x) == "1:0");

    const AbelianGroup c4({4});
    CHECK(parse_element(c4, "3").coords == std::vector<std::int64_t>{3});
    CHECK(to_string(make_element(c4, {3})) == "3");

    CHECK_THROWS_AS(parse_group("4,x"), precondition_error);
    CHECK_THROWS_AS(parse_group("1"), invalid_group_error);
    CHECK_THROWS_AS(parse_element(g, "1:2:3"), precondition_error);
    CHECK_THROWS_AS(parse_element(g, "a:b"), precondition_error);
}

TEST_CASE("iteration is a bijection and orders divide the exponent, |G| <= 200") {
    for (const auto& factors : testutil::all_factor_multisets(200)) {
        const AbelianGroup g(factors);
        std::int64_t counted = 0;
        for (std::int64_t i = 0; i < g.order(); ++i) {
            const GroupElement x = g.element_at(i);
            REQUIRE(g.index_of(x) == i);
            ++counted;

            const std::int64_t ord = element_order(g, x);
            REQUIRE(g.exponent() % ord == 0);
            REQUIRE(add(g, x, neg(g, x)) == g.zero());
        }
        REQUIRE(counted == g.order());
    }
}

TEST_CASE("element order formula matches repeated addition, |G| <= 200") {
    for (const auto& factors : testutil::all_factor_multisets(200)) {
        const AbelianGroup g(factors);
        for (std::int64_t i = 0; i < g.order(); ++i) {
            const GroupElement x = g.element_at(i);
            REQUIRE(element_order(g, x) == testutil::order_by_repeated_addition(g, x));
        }
    }
}
