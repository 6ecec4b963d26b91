#include "cayley/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/ntheory.hpp"

namespace cayley {

namespace {

std::int64_t action_base(const AbelianGroup& g, ActionModulus modulus) {
    return modulus == ActionModulus::exponent ? g.exponent() : g.order();
}

} // namespace

GroupElement act(const AbelianGroup& g, std::int64_t a, const GroupElement& x) {
    if (a < 1 || std::gcd(a, g.order()) != 1)
        throw invalid_unit_error("residue " + std::to_string(a) +
                                 " is not a unit for group " + to_string(g));
    return scalar_mul(g, a, x);
}

Orbit orbit_of(const AbelianGroup& g, const GroupElement& x, ActionModulus modulus) {
    if (is_zero(x))
        throw excluded_identity_error("the identity has no Galois orbit in G \\ {0}");
    std::vector<std::int64_t> member_indices;
    for (const std::int64_t a : units_mod(action_base(g, modulus)))
        member_indices.push_back(g.index_of(act(g, a, x)));
    std::sort(member_indices.begin(), member_indices.end());
    member_indices.erase(std::unique(member_indices.begin(), member_indices.end()),
                         member_indices.end());

    Orbit orbit;
    orbit.elements.reserve(member_indices.size());
    for (const std::int64_t idx : member_indices)
        orbit.elements.push_back(g.element_at(idx));
    orbit.representative = orbit.elements.front();
    orbit.common_order = element_order(g, orbit.representative);
    return orbit;
}

OrbitPartition::OrbitPartition(AbelianGroup group, std::vector<Orbit> orbits)
    : group_(std::move(group)), orbits_(std::move(orbits)),
      orbit_id_by_index_(static_cast<std::size_t>(group_.order()), -1) {
    for (std::size_t id = 0; id < orbits_.size(); ++id)
        for (const GroupElement& x : orbits_[id].elements)
            orbit_id_by_index_[static_cast<std::size_t>(group_.index_of(x))] =
                static_cast<std::int32_t>(id);
}

OrbitPartition orbit_partition(const AbelianGroup& g, ActionModulus modulus,
                               std::int64_t enumeration_cap) {
    const std::int64_t n = g.order();
    if (n > enumeration_cap)
        throw resource_limit_error("group order " + std::to_string(n) +
                                   " exceeds the enumeration cap " +
                                   std::to_string(enumeration_cap));
    const std::vector<std::int64_t> units = units_mod(action_base(g, modulus));

    std::vector<Orbit> orbits;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    // Ascending scan: the first unseen index is its orbit's minimum, so the
    // representative rule falls out of the loop order.
    for (std::int64_t idx = 1; idx < n; ++idx) {
        if (seen[static_cast<std::size_t>(idx)])
            continue;
        const GroupElement x = g.element_at(idx);
        std::vector<std::int64_t> member_indices;
        for (const std::int64_t a : units) {
            const std::int64_t member = g.index_of(scalar_mul(g, a, x));
            if (!seen[static_cast<std::size_t>(member)]) {
                seen[static_cast<std::size_t>(member)] = 1;
                member_indices.push_back(member);
            }
        }
        std::sort(member_indices.begin(), member_indices.end());

        Orbit orbit;
        orbit.elements.reserve(member_indices.size());
        for (const std::int64_t member : member_indices)
            orbit.elements.push_back(g.element_at(member));
        orbit.representative = orbit.elements.front();
        orbit.common_order = element_order(g, orbit.representative);
        orbits.push_back(std::move(orbit));
    }
    return OrbitPartition(g, std::move(orbits));
}

std::vector<DivisorClass> divisor_classes(std::int64_t n0) {
    if (n0 < 2)
        throw precondition_error("divisor classes need a modulus >= 2");
    std::vector<DivisorClass> classes;
    for (const std::int64_t d : divisors(n0)) {
        if (d == n0)
            continue;
        DivisorClass cls;
        cls.modulus = n0;
        cls.divisor = d;
        for (std::int64_t k = d; k < n0; k += d)
            if (std::gcd(k, n0) == d)
                cls.members.push_back(k);
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<ProductCell> product_cells(const AbelianGroup& g) {
    // Per-coordinate choices: 0 for the zero singleton, else a proper divisor d of n_i.
    std::vector<std::vector<std::int64_t>> choices(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        choices[i].push_back(0);
        for (const std::int64_t d : divisors(g.factors()[i]))
            if (d != g.factors()[i])
                choices[i].push_back(d);
    }

    std::vector<ProductCell> cells;
    std::vector<std::size_t> pick(g.rank(), 0);
    while (true) {
        ProductCell cell;
        cell.divisor_choice.resize(g.rank());
        cell.cardinality = 1;
        std::int64_t root_order = 1; // lcm of n_i/d_i over nonzero coordinates
        bool all_zero = true;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            const std::int64_t d = choices[i][pick[i]];
            cell.divisor_choice[i] = d;
            if (d == 0)
                continue;
            all_zero = false;
            const std::int64_t q = g.factors()[i] / d;
            cell.cardinality *= euler_phi(q);
            root_order = std::lcm(root_order, q);
        }
        if (!all_zero) {
            cell.degree = euler_phi(root_order);
            cells.push_back(std::move(cell));
        }

        std::size_t i = g.rank();
        while (i-- > 0) {
            if (++pick[i] < choices[i].size())
                break;
            pick[i] = 0;
            if (i == 0)
                return cells;
        }
    }
}

std::int64_t count_orbits_formula(const AbelianGroup& g) {
    std::int64_t r = 0;
    for (const ProductCell& cell : product_cells(g))
        r += cell.cardinality / cell.degree;
    return r;
}

CyclicOrbitMatch cyclic_orbits_equal_divisor_classes(std::int64_t n0) {
    const AbelianGroup g({n0});
    const OrbitPartition partition = orbit_partition(g);
    const std::vector<DivisorClass> classes = divisor_classes(n0);

    CyclicOrbitMatch match;
    if (partition.r() != static_cast<std::int64_t>(classes.size()))
        return match;

    std::vector<char> class_used(classes.size(), 0);
    for (std::size_t id = 0; id < partition.orbits().size(); ++id) {
        const Orbit& orbit = partition.orbits()[id];
        const std::int64_t d = std::gcd(orbit.representative.coords[0], n0);
        const auto cls = std::find_if(classes.begin(), classes.end(),
                                      [d](const DivisorClass& c) { return c.divisor == d; });
        if (cls == classes.end() || class_used[static_cast<std::size_t>(cls - classes.begin())])
            return match;

        std::vector<std::int64_t> orbit_members;
        for (const GroupElement& x : orbit.elements)
            orbit_members.push_back(x.coords[0]);
        if (orbit_members != cls->members)
            return match;

        class_used[static_cast<std::size_t>(cls - classes.begin())] = 1;
        match.orbit_to_divisor.emplace_back(static_cast<std::int32_t>(id), d);
    }
    match.equal = true;
    return match;
}

} // namespace cayley
