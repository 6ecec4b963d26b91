#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// Element of a finite abelian group: one residue per cyclic factor,
/// coordinate i reduced into [0, n_i). Ordering is lexicographic on the
/// coordinate tuple, which coincides with the group iteration order.
struct GroupElement {
    std::vector<std::int64_t> coords;

    auto operator<=>(const GroupElement&) const = default;
};

/// Finite abelian group given as a direct sum of cyclic factors Z/n_i Z.
///
/// Factors are kept verbatim in the order given; they are not required to
/// form an invariant-factor chain. Every factor must be >= 2 (normalize
/// away factors of 1 before constructing). Iteration over the group is
/// row-major over coordinates with the last coordinate running fastest;
/// element_at/index_of realize that fixed order.
class AbelianGroup {
  public:
    /// Throws invalid_group_error unless every factor is >= 2 and the
    /// order fits comfortably in 64-bit arithmetic.
    explicit AbelianGroup(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const noexcept { return factors_; }

    /// Number of cyclic factors (the coordinate count m).
    std::size_t rank() const noexcept { return factors_.size(); }

    /// |G| = product of the factors.
    std::int64_t order() const noexcept { return order_; }

    /// lcm of the factors; the largest element order.
    std::int64_t exponent() const noexcept { return exponent_; }

    GroupElement zero() const;

    /// Element at position `index` in the fixed iteration order, 0 <= index < order().
    GroupElement element_at(std::int64_t index) const;

    /// Inverse of element_at.
    std::int64_t index_of(const GroupElement& x) const;

    bool operator==(const AbelianGroup&) const = default;

  private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 0;
    std::int64_t exponent_ = 0;
};

/// Parse the CLI/config group format: comma-separated moduli, e.g. "4,6".
AbelianGroup parse_group(std::string_view spec);

/// Build an element from raw coordinates, reducing each into [0, n_i).
/// Negative inputs reduce to the usual nonnegative residue.
GroupElement make_element(const AbelianGroup& g, std::vector<std::int64_t> raw);

bool is_zero(const GroupElement& x);

GroupElement add(const AbelianGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const AbelianGroup& g, const GroupElement& x);
GroupElement scalar_mul(const AbelianGroup& g, std::int64_t k, const GroupElement& x);

/// Least k >= 1 with k*x = 0; equals lcm_i(n_i / gcd(x_i, n_i)).
std::int64_t element_order(const AbelianGroup& g, const GroupElement& x);

/// "4,6" -- inverse of parse_group.
std::string to_string(const AbelianGroup& g);

/// Coordinates joined by ':', e.g. "1:0". Single-coordinate elements print bare.
std::string to_string(const GroupElement& x);

/// Parse the CLI element format (coordinates joined by ':'); reduces like make_element.
GroupElement parse_element(const AbelianGroup& g, std::string_view text);

} // namespace cayley
