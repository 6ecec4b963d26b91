#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cayley/group.hpp"
#include "cayley/orbits.hpp"

namespace cayley {

inline constexpr std::int64_t kDefaultDenseMatrixCap = 4096;

/// Exact root of unity zeta_order^exponent, 0 <= exponent < order.
struct RootOfUnity {
    std::int64_t order = 1;
    std::int64_t exponent = 0;

    std::complex<double> value() const;
};

/// chi_g(s) = prod_i zeta_{n_i}^{g_i s_i}, returned exactly as zeta_L^e with
/// L = exponent(G) and e = sum_i (L/n_i) g_i s_i mod L.
RootOfUnity character_value(const AbelianGroup& g, const GroupElement& a, const GroupElement& s);

/// Inverse-closed, identity-free subset of G: the edge recipe of an
/// undirected Cayley graph. Construction validates both conditions.
class ConnectionSet {
  public:
    ConnectionSet(AbelianGroup group, std::vector<GroupElement> elements,
                  std::vector<std::int64_t> indices);

    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    const std::vector<std::int64_t>& indices() const noexcept { return indices_; } // sorted
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(indices_.size()); }
    bool contains_index(std::int64_t index) const;

  private:
    AbelianGroup group_;
    std::vector<GroupElement> elements_; // sorted in iteration order
    std::vector<std::int64_t> indices_;
};

/// Validate and build a connection set. Duplicates collapse. Throws
/// identity_in_set_error if 0 is present, asymmetry_error (naming the
/// offenders) if some s lacks -s.
ConnectionSet make_connection_set(const AbelianGroup& g, std::vector<GroupElement> elements);

/// Result of the orbit-union test: the graph is integral iff S is exactly a
/// union of Galois orbits, i.e. iff residue is empty.
struct IntegralityVerdict {
    bool is_integral = false;
    std::vector<std::int32_t> covered_orbit_ids; // orbits wholly inside S
    std::vector<GroupElement> residue;           // members of partially covered orbits
};

/// Purely combinatorial integrality decision; no eigenvalue is computed.
IntegralityVerdict is_integral(const ConnectionSet& s, const OrbitPartition& partition);

/// Exact integer eigenvalue at g for an integral S: the sum over covered
/// orbits of the Ramanujan sum c_d(u), where d is the orbit's common order
/// and zeta_d^u = chi_g(representative). Integer arithmetic throughout.
std::int64_t eigenvalue_exact(const AbelianGroup& g, const OrbitPartition& partition,
                              std::span<const std::int32_t> covered_orbit_ids,
                              const GroupElement& at);

/// Same, but checks the precondition: throws precondition_error unless s is
/// a union of orbits.
std::int64_t eigenvalue_exact(const ConnectionSet& s, const OrbitPartition& partition,
                              const GroupElement& at);

/// lambda_g = sum_{s in S} chi_g(s) for every g, by direct complex
/// summation, indexed in group iteration order. The float reference path.
std::vector<std::complex<double>> character_sums(const ConnectionSet& s);

/// The full spectrum, indexed by g in group iteration order (not sorted, so
/// the g <-> lambda_g correspondence is preserved).
struct SpectrumReport {
    enum class Mode { exact_integer, complex_float };

    Mode mode = Mode::exact_integer;
    bool integral = false;
    std::vector<std::int32_t> orbit_ids;    // orbits wholly covered by S
    std::vector<std::int64_t> exact_values; // exact mode only
    std::vector<double> float_values;       // float mode only (imaginary parts cancel)

    std::int64_t length() const noexcept;

    /// Distinct (value, multiplicity) pairs, ascending by value. In float
    /// mode values within merge_tol of each other collapse.
    std::vector<std::pair<double, std::int64_t>> multiplicities(double merge_tol = 1e-9) const;
};

/// Dispatches on integrality: exact Ramanujan-sum route for orbit unions,
/// direct character sums otherwise. No rounding anywhere on the exact path.
SpectrumReport spectrum(const ConnectionSet& s, const OrbitPartition& partition);

/// Convenience overload computing the orbit partition internally.
SpectrumReport spectrum(const ConnectionSet& s);

/// Dense 0/1 adjacency matrix in iteration order: A(x, y) = 1 iff y - x in S.
/// Symmetric with zero diagonal. Throws resource_limit_error above the cap.
Eigen::MatrixXi adjacency_matrix(const ConnectionSet& s, std::int64_t cap = kDefaultDenseMatrixCap);

} // namespace cayley
