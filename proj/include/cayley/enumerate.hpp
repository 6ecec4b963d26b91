#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/orbits.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

/// The nonzero elements of G grouped into negation slots: self-inverse
/// elements (x = -x) and {x, -x} pairs. Every inverse-closed identity-free
/// subset of G is a choice of slots, so there are 2^(#involutions + #pairs).
struct SymmetricSlots {
    std::vector<std::int64_t> involutions;                     // element indices
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (x, -x), x < -x

    std::size_t count() const noexcept { return involutions.size() + pairs.size(); }
};

SymmetricSlots symmetric_slots(const AbelianGroup& g);

/// Connection set selected by one bit per slot (involutions first, then pairs).
ConnectionSet connection_set_from_slots(const AbelianGroup& g, const SymmetricSlots& slots,
                                        std::uint64_t mask);

/// Union of the orbits selected by the bitmask (bit i = orbit id i).
/// Inverse-closed and identity-free by construction.
ConnectionSet connection_set_from_orbits(const AbelianGroup& g, const OrbitPartition& partition,
                                         std::uint64_t mask);

/// One integral Cayley graph in the enumerated family.
struct FamilyEntry {
    std::uint64_t mask = 0;       // orbit-subset bitmask
    std::int64_t set_size = 0;    // |S|
    std::int64_t degree = 0;      // regular degree = lambda at 0 = |S|
    bool connected = false;       // S generates G
    bool empty = false;           // the edgeless graph (mask 0)
    std::vector<std::pair<std::int64_t, std::int64_t>> spectrum_multiplicities; // value, count
};

/// All 2^r integral Cayley graphs on G, one per orbit subset, in bitmask order.
struct IntegralFamilyReport {
    AbelianGroup group;
    std::int64_t r = 0;
    std::uint64_t total = 0; // 2^r
    std::vector<FamilyEntry> entries;
};

/// Enumerates the full family. Throws resource_limit_error when 2^r would
/// exceed `limit`; the caller must raise the limit explicitly to proceed.
IntegralFamilyReport enumerate_integral(const AbelianGroup& g, const OrbitPartition& partition,
                                        std::uint64_t limit = std::uint64_t{1} << 20);

/// Exhaustive sharpness measurement for the 2^r bound: sweep ALL
/// inverse-closed identity-free subsets of G, count those whose numerical
/// spectrum is within tol of integers, and compare with 2^r.
struct ExactnessReport {
    std::int64_t r = 0;
    std::uint64_t bound = 0;    // 2^r
    std::uint64_t achieved = 0; // integral sets found by the oracle sweep
    bool equal = false;
};

/// Restricted to the exhaustive regime; throws resource_limit_error when
/// |G| > max_order.
ExactnessReport exactness_check(const AbelianGroup& g, double tol = 1e-6,
                                std::int64_t max_order = 12);

/// True iff S generates G, i.e. the Cayley graph is connected.
bool is_connected(const ConnectionSet& s);

} // namespace cayley
