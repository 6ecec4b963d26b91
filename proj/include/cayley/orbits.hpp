#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Default cap on |G| for operations that walk the whole group.
inline constexpr std::int64_t kDefaultEnumerationCap = std::int64_t{1} << 20;

/// Which unit group drives the Galois action. The two choices produce the
/// same orbits; acting modulo the exponent is cheaper and is the default.
enum class ActionModulus { exponent, group_order };

/// Galois action of a unit residue a: coordinate-wise multiplication,
/// (a*x_1 mod n_1, ..., a*x_m mod n_m). Requires gcd(a, |G|) = 1, which is
/// equivalent to gcd(a, exponent) = 1 since both share the same prime set.
GroupElement act(const AbelianGroup& g, std::int64_t a, const GroupElement& x);

/// One Galois orbit on G \ {0}. All members share the same element order
/// (common_order) and the orbit has exactly phi(common_order) members.
struct Orbit {
    GroupElement representative;        // minimal member in iteration order
    std::vector<GroupElement> elements; // sorted in iteration order
    std::int64_t common_order = 0;

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(elements.size()); }
};

/// The partition of G \ {0} into Galois orbits, ordered by representative.
class OrbitPartition {
  public:
    OrbitPartition(AbelianGroup group, std::vector<Orbit> orbits);

    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<Orbit>& orbits() const noexcept { return orbits_; }

    /// r(G): the number of orbits.
    std::int64_t r() const noexcept { return static_cast<std::int64_t>(orbits_.size()); }

    /// Orbit id of the element at `index` in iteration order; -1 for the identity.
    std::int32_t orbit_id_of_index(std::int64_t index) const { return orbit_id_by_index_.at(static_cast<std::size_t>(index)); }

    std::int32_t orbit_id_of(const GroupElement& x) const { return orbit_id_of_index(group_.index_of(x)); }

  private:
    AbelianGroup group_;
    std::vector<Orbit> orbits_;
    std::vector<std::int32_t> orbit_id_by_index_; // element index -> orbit id
};

/// Orbit of a nonzero element: {a*x : a unit}. Throws excluded_identity_error on x = 0.
Orbit orbit_of(const AbelianGroup& g, const GroupElement& x,
               ActionModulus modulus = ActionModulus::exponent);

/// Complete orbit partition of G \ {0}. Deterministic: orbits are listed by
/// ascending representative, elements ascending within each orbit.
OrbitPartition orbit_partition(const AbelianGroup& g,
                               ActionModulus modulus = ActionModulus::exponent,
                               std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// The set {k : 0 < k < n0, gcd(k, n0) = d} for a proper divisor d of n0.
/// The classes over all proper divisors partition [1, n0).
struct DivisorClass {
    std::int64_t modulus = 0;
    std::int64_t divisor = 0;
    std::vector<std::int64_t> members; // ascending; phi(n0/d) of them
};

/// One class per divisor d of n0 with 0 < d < n0, ascending by d. n0 >= 2.
std::vector<DivisorClass> divisor_classes(std::int64_t n0);

/// One Cartesian product cell P = p_1 x ... x p_m where p_i is either a
/// divisor class of n_i (recorded as its divisor d_i) or the zero singleton
/// (recorded as 0), not all zero. The cell splits into cardinality/degree
/// orbits under the Galois action.
struct ProductCell {
    std::vector<std::int64_t> divisor_choice; // 0 = the zero coordinate
    std::int64_t cardinality = 0;             // product of phi(n_i/d_i) over nonzero choices
    std::int64_t degree = 0;                  // phi(lcm of n_i/d_i over nonzero choices)
};

/// All product cells of G, in lexicographic choice order.
std::vector<ProductCell> product_cells(const AbelianGroup& g);

/// r(G) by pure divisor arithmetic: sum over cells of cardinality/degree.
/// No group enumeration; must agree with orbit_partition(g).r().
std::int64_t count_orbits_formula(const AbelianGroup& g);

/// Witness that the orbit partition of Z/n0 equals the divisor-class
/// partition: for each orbit, the divisor d whose class it matches.
struct CyclicOrbitMatch {
    bool equal = false;
    std::vector<std::pair<std::int32_t, std::int64_t>> orbit_to_divisor;
};

CyclicOrbitMatch cyclic_orbits_equal_divisor_classes(std::int64_t n0);

} // namespace cayley
