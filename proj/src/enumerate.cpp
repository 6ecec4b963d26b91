#include "cayley/enumerate.hpp"

#include <algorithm>
#include <string>

#include "cayley/oracle.hpp"

namespace cayley {

SymmetricSlots symmetric_slots(const AbelianGroup& g) {
    SymmetricSlots slots;
    for (std::int64_t idx = 1; idx < g.order(); ++idx) {
        const std::int64_t negated = g.index_of(neg(g, g.element_at(idx)));
        if (negated == idx)
            slots.involutions.push_back(idx);
        else if (idx < negated)
            slots.pairs.emplace_back(idx, negated);
    }
    return slots;
}

ConnectionSet connection_set_from_slots(const AbelianGroup& g, const SymmetricSlots& slots,
                                        std::uint64_t mask) {
    if (slots.count() > 63)
        throw resource_limit_error("too many negation slots for a 64-bit mask");
    std::vector<GroupElement> elements;
    for (std::size_t i = 0; i < slots.involutions.size(); ++i)
        if (mask >> i & 1)
            elements.push_back(g.element_at(slots.involutions[i]));
    for (std::size_t j = 0; j < slots.pairs.size(); ++j)
        if (mask >> (slots.involutions.size() + j) & 1) {
            elements.push_back(g.element_at(slots.pairs[j].first));
            elements.push_back(g.element_at(slots.pairs[j].second));
        }
    return make_connection_set(g, std::move(elements));
}

ConnectionSet connection_set_from_orbits(const AbelianGroup& g, const OrbitPartition& partition,
                                         std::uint64_t mask) {
    if (partition.r() > 63)
        throw resource_limit_error("too many orbits for a 64-bit mask");
    std::vector<GroupElement> elements;
    for (std::int64_t id = 0; id < partition.r(); ++id)
        if (mask >> id & 1) {
            const Orbit& orbit = partition.orbits()[static_cast<std::size_t>(id)];
            elements.insert(elements.end(), orbit.elements.begin(), orbit.elements.end());
        }
    return make_connection_set(g, std::move(elements));
}

IntegralFamilyReport enumerate_integral(const AbelianGroup& g, const OrbitPartition& partition,
                                        std::uint64_t limit) {
    const std::int64_t r = partition.r();
    if (r > 62 || (std::uint64_t{1} << r) > limit)
        throw resource_limit_error("2^" + std::to_string(r) +
                                   " integral graphs exceed the enumeration limit " +
                                   std::to_string(limit) + "; raise the limit to proceed");

    IntegralFamilyReport report{g, r, std::uint64_t{1} << r, {}};
    report.entries.reserve(report.total);
    for (std::uint64_t mask = 0; mask < report.total; ++mask) {
        const ConnectionSet s = connection_set_from_orbits(g, partition, mask);
        const SpectrumReport spec = spectrum(s, partition);
        if (!spec.integral)
            throw internal_error("orbit union failed the integrality test");

        FamilyEntry entry;
        entry.mask = mask;
        entry.set_size = s.size();
        entry.degree = s.size();
        entry.connected = is_connected(s);
        entry.empty = mask == 0;
        for (const auto& [value, count] : spec.multiplicities())
            entry.spectrum_multiplicities.emplace_back(static_cast<std::int64_t>(value), count);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

ExactnessReport exactness_check(const AbelianGroup& g, double tol, std::int64_t max_order) {
    if (g.order() > max_order)
        throw resource_limit_error("exactness check sweeps all symmetric subsets; group order " +
                                   std::to_string(g.order()) + " exceeds " +
                                   std::to_string(max_order));

    ExactnessReport report;
    report.r = orbit_partition(g).r();
    report.bound = std::uint64_t{1} << report.r;

    const SymmetricSlots slots = symmetric_slots(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.count()); ++mask) {
        const ConnectionSet s = connection_set_from_slots(g, slots, mask);
        const auto eigenvalues = eigenvalues_numeric(adjacency_matrix(s).cast<double>());
        if (near_integral(eigenvalues, tol).integral)
            ++report.achieved;
    }
    report.equal = report.achieved == report.bound;
    return report;
}

bool is_connected(const ConnectionSet& s) {
    const AbelianGroup& g = s.group();
    const std::int64_t n = g.order();
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> frontier{0};
    reached[0] = 1;
    std::int64_t count = 1;
    while (!frontier.empty()) {
        const std::int64_t x = frontier.back();
        frontier.pop_back();
        const GroupElement ex = g.element_at(x);
        for (const GroupElement& step : s.elements()) {
            const std::int64_t y = g.index_of(add(g, ex, step));
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = 1;
                ++count;
                frontier.push_back(y);
            }
        }
    }
    return count == n;
}

} // namespace cayley
