#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "cayley/ntheory.hpp"
#include "cayley/orbits.hpp"
#include "test_util.hpp"

using namespace cayley;

namespace {

std::vector<std::vector<std::int64_t>> orbit_index_sets(const OrbitPartition& partition) {
    std::vector<std::vector<std::int64_t>> out;
    for (const Orbit& orbit : partition.orbits()) {
        std::vector<std::int64_t> indices;
        for (const GroupElement& x : orbit.elements)
            indices.push_back(partition.group().index_of(x));
        out.push_back(std::move(indices));
    }
    return out;
}

} // namespace

TEST_CASE("unit action on elements") {
    const AbelianGroup c4({4});
    CHECK(act(c4, 3, make_element(c4, {1})) == make_element(c4, {3}));
    CHECK_THROWS_AS(act(c4, 2, make_element(c4, {1})), invalid_unit_error);

    const AbelianGroup g({4, 6});
    CHECK(act(g, 5, make_element(g, {1, 1})) == make_element(g, {1, 5}));

    const AbelianGroup c7({7});
    for (std::int64_t i = 0; i < 7; ++i)
        CHECK(act(c7, 1, c7.element_at(i)) == c7.element_at(i));
}

TEST_CASE("orbit of a single element") {
    const AbelianGroup c4({4});
    const Orbit o = orbit_of(c4, make_element(c4, {1}));
    CHECK(o.elements == std::vector<GroupElement>{make_element(c4, {1}), make_element(c4, {3})});
    CHECK(o.representative == make_element(c4, {1}));
    CHECK(o.common_order == 4);

    const AbelianGroup klein({2, 2});
    CHECK(orbit_of(klein, make_element(klein, {1, 0})).size() == 1);

    const AbelianGroup c5({5});
    CHECK(orbit_of(c5, make_element(c5, {2})).size() == 4);

    CHECK_THROWS_AS(orbit_of(c4, c4.zero()), excluded_identity_error);
}

TEST_CASE("orbit partition of small groups") {
    const AbelianGroup c4({4});
    const OrbitPartition p4 = orbit_partition(c4);
    CHECK(p4.r() == 2);
    CHECK(orbit_index_sets(p4) == std::vector<std::vector<std::int64_t>>{{1, 3}, {2}});
    CHECK(p4.orbit_id_of(make_element(c4, {3})) == 0);
    CHECK(p4.orbit_id_of_index(0) == -1);

    const OrbitPartition pk = orbit_partition(AbelianGroup({2, 2}));
    CHECK(pk.r() == 3);
    for (const Orbit& orbit : pk.orbits())
        CHECK(orbit.size() == 1);

    const OrbitPartition p5 = orbit_partition(AbelianGroup({5}));
    CHECK(p5.r() == 1);
    CHECK(p5.orbits()[0].size() == 4);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(orbit_partition(AbelianGroup({2, 2, 2, 2, 2}), ActionModulus::exponent, 16),
                    resource_limit_error);
}

TEST_CASE("divisor classes") {
    const auto c4 = divisor_classes(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].divisor == 1);
    CHECK(c4[0].members == std::vector<std::int64_t>{1, 3});
    CHECK(c4[1].divisor == 2);
    CHECK(c4[1].members == std::vector<std::int64_t>{2});

    const auto c2 = divisor_classes(2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].members == std::vector<std::int64_t>{1});

    const auto c6 = divisor_classes(6);
    REQUIRE(c6.size() == 3);
    CHECK(c6[0].members == std::vector<std::int64_t>{1, 5});
    CHECK(c6[1].members == std::vector<std::int64_t>{2, 4});
    CHECK(c6[2].members == std::vector<std::int64_t>{3});

    CHECK_THROWS_AS(divisor_classes(1), precondition_error);
}

TEST_CASE("divisor classes partition [1, n) with sizes phi(n/d)") {
    for (std::int64_t n = 2; n <= 100; ++n) {
        std::set<std::int64_t> seen;
        for (const DivisorClass& cls : divisor_classes(n)) {
            CHECK(static_cast<std::int64_t>(cls.members.size()) == euler_phi(n / cls.divisor));
            for (const std::int64_t k : cls.members) {
                CHECK(std::gcd(k, n) == cls.divisor);
                CHECK(seen.insert(k).second);
            }
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == n - 1);
    }
}

TEST_CASE("product cells of small groups") {
    const auto cells4 = product_cells(AbelianGroup({4}));
    REQUIRE(cells4.size() == 2);
    CHECK(cells4[0].cardinality / cells4[0].degree + cells4[1].cardinality / cells4[1].degree == 2);

    const auto klein = product_cells(AbelianGroup({2, 2}));
    CHECK(klein.size() == 3);
    for (const ProductCell& cell : klein) {
        CHECK(cell.cardinality == 1);
        CHECK(cell.degree == 1);
    }
}

TEST_CASE("orbit count via the divisor-lattice formula") {
    CHECK(count_orbits_formula(AbelianGroup({4})) == 2);
    CHECK(count_orbits_formula(AbelianGroup({2, 2})) == 3);
    for (const std::int64_t p : {2, 3, 5, 7, 11, 13})
        CHECK(count_orbits_formula(AbelianGroup({p})) == 1);
    CHECK(count_orbits_formula(AbelianGroup({4, 6})) == 11);
}

TEST_CASE("cell degree divides cell cardinality, |G| <= 100") {
    for (const auto& factors : testutil::all_factor_multisets(100)) {
        const AbelianGroup g(factors);
        for (const ProductCell& cell : product_cells(g)) {
            bool all_zero = true;
            for (const std::int64_t d : cell.divisor_choice)
                all_zero = all_zero && d == 0;
            REQUIRE_FALSE(all_zero);
            REQUIRE(cell.cardinality % cell.degree == 0);
        }
    }
}

TEST_CASE("partition laws and orbit size law, |G| <= 100") {
    for (const auto& factors : testutil::all_factor_multisets(100)) {
        const AbelianGroup g(factors);
        const OrbitPartition partition = orbit_partition(g);

        // exhaustive: ids cover G \ {0} exactly, representatives minimal, sizes add up
        std::int64_t total = 0;
        REQUIRE(partition.orbit_id_of_index(0) == -1);
        for (std::int64_t i = 1; i < g.order(); ++i) {
            const std::int32_t id = partition.orbit_id_of_index(i);
            REQUIRE(id >= 0);
            REQUIRE(id < partition.r());
        }
        for (std::size_t id = 0; id < partition.orbits().size(); ++id) {
            const Orbit& orbit = partition.orbits()[id];
            total += orbit.size();
            REQUIRE(orbit.representative == orbit.elements.front());
            REQUIRE(std::is_sorted(orbit.elements.begin(), orbit.elements.end()));
            REQUIRE(orbit.size() == euler_phi(orbit.common_order));
            for (const GroupElement& x : orbit.elements) {
                REQUIRE(element_order(g, x) == orbit.common_order);
                REQUIRE(partition.orbit_id_of(x) == static_cast<std::int32_t>(id));
                // negation closure
                REQUIRE(partition.orbit_id_of(neg(g, x)) == static_cast<std::int32_t>(id));
            }
        }
        REQUIRE(total == g.order() - 1);

        // two-route agreement
        REQUIRE(count_orbits_formula(g) == partition.r());
    }
}

TEST_CASE("action modulo the exponent equals action modulo the order, |G| <= 100") {
    for (const auto& factors : testutil::all_factor_multisets(100)) {
        const AbelianGroup g(factors);
        const auto via_exponent = orbit_index_sets(orbit_partition(g, ActionModulus::exponent));
        const auto via_order = orbit_index_sets(orbit_partition(g, ActionModulus::group_order));
        REQUIRE(via_exponent == via_order);
    }
}

TEST_CASE("cyclic orbits are the divisor classes") {
    const CyclicOrbitMatch m4 = cyclic_orbits_equal_divisor_classes(4);
    CHECK(m4.equal);
    REQUIRE(m4.orbit_to_divisor.size() == 2);
    CHECK(m4.orbit_to_divisor[0] == std::pair<std::int32_t, std::int64_t>{0, 1});
    CHECK(m4.orbit_to_divisor[1] == std::pair<std::int32_t, std::int64_t>{1, 2});

    CHECK(cyclic_orbits_equal_divisor_classes(2).equal);

    const CyclicOrbitMatch m12 = cyclic_orbits_equal_divisor_classes(12);
    CHECK(m12.equal);
    CHECK(m12.orbit_to_divisor.size() == 5); // d in {1, 2, 3, 4, 6}

    for (std::int64_t n = 2; n <= 50; ++n)
        CHECK(cyclic_orbits_equal_divisor_classes(n).equal);
}
