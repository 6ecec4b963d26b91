#include "cayley/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cayley/ntheory.hpp"

namespace cayley {

std::complex<double> RootOfUnity::value() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(exponent) /
                               static_cast<double>(order));
}

RootOfUnity character_value(const AbelianGroup& g, const GroupElement& a, const GroupElement& s) {
    if (a.coords.size() != g.rank() || s.coords.size() != g.rank())
        throw precondition_error("element has wrong coordinate count for this group");
    const std::int64_t big_l = g.exponent();
    std::int64_t e = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::int64_t n = g.factors()[i];
        const std::int64_t partial = (a.coords[i] * s.coords[i]) % n;
        e = (e + (big_l / n) * partial) % big_l;
    }
    return RootOfUnity{big_l, e};
}

ConnectionSet::ConnectionSet(AbelianGroup group, std::vector<GroupElement> elements,
                             std::vector<std::int64_t> indices)
    : group_(std::move(group)), elements_(std::move(elements)), indices_(std::move(indices)) {}

bool ConnectionSet::contains_index(std::int64_t index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

ConnectionSet make_connection_set(const AbelianGroup& g, std::vector<GroupElement> elements) {
    std::vector<std::int64_t> indices;
    indices.reserve(elements.size());
    for (const GroupElement& x : elements)
        indices.push_back(g.index_of(x));
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

    if (!indices.empty() && indices.front() == 0)
        throw identity_in_set_error("connection set must not contain the identity");

    std::vector<std::int64_t> offenders;
    for (const std::int64_t idx : indices) {
        const std::int64_t negated = g.index_of(neg(g, g.element_at(idx)));
        if (!std::binary_search(indices.begin(), indices.end(), negated))
            offenders.push_back(idx);
    }
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << "connection set is not inverse-closed; missing negatives of:";
        for (const std::int64_t idx : offenders)
            msg << ' ' << to_string(g.element_at(idx));
        throw asymmetry_error(msg.str());
    }

    std::vector<GroupElement> sorted;
    sorted.reserve(indices.size());
    for (const std::int64_t idx : indices)
        sorted.push_back(g.element_at(idx));
    return ConnectionSet(g, std::move(sorted), std::move(indices));
}

IntegralityVerdict is_integral(const ConnectionSet& s, const OrbitPartition& partition) {
    if (partition.group() != s.group())
        throw precondition_error("orbit partition belongs to a different group");

    std::vector<std::int64_t> hits(static_cast<std::size_t>(partition.r()), 0);
    for (const std::int64_t idx : s.indices())
        ++hits[static_cast<std::size_t>(partition.orbit_id_of_index(idx))];

    IntegralityVerdict verdict;
    std::vector<char> partial(static_cast<std::size_t>(partition.r()), 0);
    for (std::size_t id = 0; id < hits.size(); ++id) {
        if (hits[id] == 0)
            continue;
        if (hits[id] == partition.orbits()[id].size())
            verdict.covered_orbit_ids.push_back(static_cast<std::int32_t>(id));
        else
            partial[id] = 1;
    }
    for (const std::int64_t idx : s.indices()) {
        const std::int32_t id = partition.orbit_id_of_index(idx);
        if (partial[static_cast<std::size_t>(id)])
            verdict.residue.push_back(s.group().element_at(idx));
    }
    verdict.is_integral = verdict.residue.empty();
    return verdict;
}

std::int64_t eigenvalue_exact(const AbelianGroup& g, const OrbitPartition& partition,
                              std::span<const std::int32_t> covered_orbit_ids,
                              const GroupElement& at) {
    const std::int64_t big_l = g.exponent();
    std::int64_t lambda = 0;
    for (const std::int32_t id : covered_orbit_ids) {
        const Orbit& orbit = partition.orbits()[static_cast<std::size_t>(id)];
        const std::int64_t d = orbit.common_order;
        const RootOfUnity z = character_value(g, at, orbit.representative);
        // chi_at(rep) is a d-th root of unity, so its exponent is a multiple of L/d.
        const std::int64_t step = big_l / d;
        if (z.exponent % step != 0)
            throw internal_error("character exponent not divisible by L/d");
        lambda += ramanujan_sum(d, z.exponent / step);
    }
    return lambda;
}

std::int64_t eigenvalue_exact(const ConnectionSet& s, const OrbitPartition& partition,
                              const GroupElement& at) {
    const IntegralityVerdict verdict = is_integral(s, partition);
    if (!verdict.is_integral)
        throw precondition_error("exact eigenvalues require S to be a union of orbits");
    return eigenvalue_exact(s.group(), partition, verdict.covered_orbit_ids, at);
}

std::vector<std::complex<double>> character_sums(const ConnectionSet& s) {
    const AbelianGroup& g = s.group();
    const std::int64_t n = g.order();
    const std::int64_t big_l = g.exponent();

    std::vector<std::complex<double>> root_powers(static_cast<std::size_t>(big_l));
    for (std::int64_t k = 0; k < big_l; ++k)
        root_powers[static_cast<std::size_t>(k)] = RootOfUnity{big_l, k}.value();

    std::vector<std::complex<double>> sums(static_cast<std::size_t>(n));
    for (std::int64_t gi = 0; gi < n; ++gi) {
        const GroupElement a = g.element_at(gi);
        std::complex<double> acc = 0.0;
        for (const GroupElement& x : s.elements())
            acc += root_powers[static_cast<std::size_t>(character_value(g, a, x).exponent)];
        sums[static_cast<std::size_t>(gi)] = acc;
    }
    return sums;
}

std::int64_t SpectrumReport::length() const noexcept {
    return mode == Mode::exact_integer ? static_cast<std::int64_t>(exact_values.size())
                                       : static_cast<std::int64_t>(float_values.size());
}

std::vector<std::pair<double, std::int64_t>>
SpectrumReport::multiplicities(double merge_tol) const {
    std::vector<double> sorted;
    if (mode == Mode::exact_integer)
        sorted.assign(exact_values.begin(), exact_values.end());
    else
        sorted.assign(float_values.begin(), float_values.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::pair<double, std::int64_t>> out;
    for (const double v : sorted) {
        if (!out.empty() && v - out.back().first <= merge_tol)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

SpectrumReport spectrum(const ConnectionSet& s, const OrbitPartition& partition) {
    const AbelianGroup& g = s.group();
    const IntegralityVerdict verdict = is_integral(s, partition);

    SpectrumReport report;
    report.integral = verdict.is_integral;
    report.orbit_ids = verdict.covered_orbit_ids;
    if (verdict.is_integral) {
        report.mode = SpectrumReport::Mode::exact_integer;
        report.exact_values.reserve(static_cast<std::size_t>(g.order()));
        for (std::int64_t gi = 0; gi < g.order(); ++gi)
            report.exact_values.push_back(eigenvalue_exact(g, partition,
                                                           verdict.covered_orbit_ids,
                                                           g.element_at(gi)));
    } else {
        report.mode = SpectrumReport::Mode::complex_float;
        report.float_values.reserve(static_cast<std::size_t>(g.order()));
        for (const std::complex<double>& z : character_sums(s))
            report.float_values.push_back(z.real());
    }
    return report;
}

SpectrumReport spectrum(const ConnectionSet& s) {
    return spectrum(s, orbit_partition(s.group()));
}

Eigen::MatrixXi adjacency_matrix(const ConnectionSet& s, std::int64_t cap) {
    const AbelianGroup& g = s.group();
    const std::int64_t n = g.order();
    if (n > cap)
        throw resource_limit_error("group order " + std::to_string(n) +
                                   " exceeds the dense-matrix cap " + std::to_string(cap));
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        const GroupElement ex = g.element_at(x);
        for (const GroupElement& step : s.elements()) {
            const std::int64_t y = g.index_of(add(g, ex, step));
            a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1;
        }
    }
    return a;
}

} // namespace cayley
