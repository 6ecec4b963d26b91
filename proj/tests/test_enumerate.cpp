#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cayley/enumerate.hpp"
#include "cayley/oracle.hpp"
#include "test_util.hpp"

using namespace cayley;

TEST_CASE("symmetric slots") {
    const AbelianGroup c4({4});
    const SymmetricSlots s4 = symmetric_slots(c4);
    CHECK(s4.involutions == std::vector<std::int64_t>{2});
    CHECK(s4.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 3}});

    const SymmetricSlots klein = symmetric_slots(AbelianGroup({2, 2}));
    CHECK(klein.involutions.size() == 3);
    CHECK(klein.pairs.empty());

    const SymmetricSlots c5 = symmetric_slots(AbelianGroup({5}));
    CHECK(c5.involutions.empty());
    CHECK(c5.pairs.size() == 2);
}

TEST_CASE("slot masks enumerate all symmetric subsets exactly once") {
    const AbelianGroup g({2, 4});
    const SymmetricSlots slots = symmetric_slots(g);
    std::set<std::vector<std::int64_t>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.count()); ++mask) {
        const ConnectionSet s = connection_set_from_slots(g, slots, mask);
        CHECK(seen.insert(s.indices()).second);
    }
    // every inverse-closed 0-free subset appears: count is 2^(#inv + #pairs)
    CHECK(seen.size() == std::size_t{1} << slots.count());
}

TEST_CASE("integral family of Z/4") {
    const AbelianGroup g({4});
    const OrbitPartition partition = orbit_partition(g);
    const IntegralFamilyReport family = enumerate_integral(g, partition);
    REQUIRE(family.total == 4);
    REQUIRE(family.entries.size() == 4);
    CHECK(family.r == 2);

    CHECK(family.entries[0].empty);
    CHECK(family.entries[0].set_size == 0);
    CHECK_FALSE(family.entries[0].connected);

    // mask 1 selects orbit {1, 3}: the 4-cycle
    CHECK(family.entries[1].set_size == 2);
    CHECK(family.entries[1].connected);
    CHECK(family.entries[1].spectrum_multiplicities ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{-2, 1}, {0, 2}, {2, 1}});

    // mask 2 selects orbit {2}: the perfect matching
    CHECK(family.entries[2].set_size == 1);
    CHECK_FALSE(family.entries[2].connected);

    // mask 3 is K4
    CHECK(family.entries[3].set_size == 3);
    CHECK(family.entries[3].spectrum_multiplicities ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, 3}, {3, 1}});
}

TEST_CASE("integral family sizes of the Klein group and Z/5") {
    const AbelianGroup klein({2, 2});
    CHECK(enumerate_integral(klein, orbit_partition(klein)).entries.size() == 8);

    const AbelianGroup c5({5});
    const IntegralFamilyReport family = enumerate_integral(c5, orbit_partition(c5));
    REQUIRE(family.entries.size() == 2); // edgeless and K5
    CHECK(family.entries[1].set_size == 4);
    CHECK(family.entries[1].spectrum_multiplicities ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, 4}, {4, 1}});
}

TEST_CASE("enumeration limit is enforced") {
    const AbelianGroup g({4});
    CHECK_THROWS_AS(enumerate_integral(g, orbit_partition(g), 2), resource_limit_error);
}

TEST_CASE("enumerated sets are distinct, integral, and oracle-verified") {
    for (const auto& factors :
         std::vector<std::vector<std::int64_t>>{{4}, {6}, {2, 3}, {2, 2, 2}, {12}}) {
        const AbelianGroup g(factors);
        const OrbitPartition partition = orbit_partition(g);
        const IntegralFamilyReport family = enumerate_integral(g, partition);
        REQUIRE(family.entries.size() == family.total);

        std::set<std::vector<std::int64_t>> distinct;
        for (const FamilyEntry& entry : family.entries) {
            const ConnectionSet s = connection_set_from_orbits(g, partition, entry.mask);
            REQUIRE(distinct.insert(s.indices()).second);
            REQUIRE(is_integral(s, partition).is_integral);
            const auto eigenvalues =
                eigenvalues_numeric(adjacency_matrix(s).cast<double>());
            REQUIRE(near_integral(eigenvalues, 1e-6).integral);
        }
    }
}

TEST_CASE("exactness of the 2^r bound on tiny groups") {
    const ExactnessReport r4 = exactness_check(AbelianGroup({4}));
    CHECK(r4.bound == 4);
    CHECK(r4.achieved == 4);
    CHECK(r4.equal);

    const ExactnessReport klein = exactness_check(AbelianGroup({2, 2}));
    CHECK(klein.bound == 8);
    CHECK(klein.achieved == 8);
    CHECK(klein.equal);

    const ExactnessReport c6 = exactness_check(AbelianGroup({6}));
    CHECK(c6.r == 3);
    CHECK(c6.bound == 8);
    CHECK(c6.achieved == 8);
    CHECK(c6.equal);

    CHECK_THROWS_AS(exactness_check(AbelianGroup({4, 6})), resource_limit_error);
}

TEST_CASE("connectivity is subgroup generation") {
    const AbelianGroup c4({4});
    CHECK_FALSE(is_connected(make_connection_set(c4, {})));
    CHECK_FALSE(is_connected(make_connection_set(c4, {make_element(c4, {2})})));
    CHECK(is_connected(
        make_connection_set(c4, {make_element(c4, {1}), make_element(c4, {3})})));

    const AbelianGroup g({2, 2});
    CHECK_FALSE(is_connected(make_connection_set(g, {make_element(g, {1, 0})})));
    CHECK(is_connected(make_connection_set(
        g, {make_element(g, {1, 0}), make_element(g, {0, 1})})));
}
