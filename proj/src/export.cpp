#include "cayley/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cayley {

namespace {

json element_json(const GroupElement& x) {
    return json(x.coords);
}

json elements_json(const std::vector<GroupElement>& xs) {
    json out = json::array();
    for (const GroupElement& x : xs)
        out.push_back(element_json(x));
    return out;
}

json multiplicities_json(const std::vector<std::pair<double, std::int64_t>>& pairs, bool exact) {
    json out = json::array();
    for (const auto& [value, count] : pairs) {
        json entry;
        if (exact)
            entry["value"] = static_cast<std::int64_t>(value);
        else
            entry["value"] = round12(value);
        entry["count"] = count;
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace

double round12(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return std::strtod(buffer, nullptr);
}

json orbit_partition_json(const OrbitPartition& partition) {
    json out;
    out["group"] = to_string(partition.group());
    out["order"] = partition.group().order();
    out["exponent"] = partition.group().exponent();
    out["r"] = partition.r();
    json orbits = json::array();
    for (std::size_t id = 0; id < partition.orbits().size(); ++id) {
        const Orbit& orbit = partition.orbits()[id];
        json entry;
        entry["id"] = id;
        entry["representative"] = element_json(orbit.representative);
        entry["size"] = orbit.size();
        entry["common_order"] = orbit.common_order;
        entry["elements"] = elements_json(orbit.elements);
        orbits.push_back(std::move(entry));
    }
    out["orbits"] = std::move(orbits);
    return out;
}

json verdict_json(const ConnectionSet& s, const IntegralityVerdict& verdict) {
    json out;
    out["group"] = to_string(s.group());
    out["set"] = elements_json(s.elements());
    out["integral"] = verdict.is_integral;
    out["covered_orbit_ids"] = verdict.covered_orbit_ids;
    out["residue"] = elements_json(verdict.residue);
    return out;
}

json spectrum_json(const ConnectionSet& s, const SpectrumReport& report) {
    const bool exact = report.mode == SpectrumReport::Mode::exact_integer;
    json out;
    out["group"] = to_string(s.group());
    out["set"] = elements_json(s.elements());
    out["mode"] = exact ? "exact-integer" : "complex-float";
    out["integral"] = report.integral;
    out["orbit_ids"] = report.orbit_ids;
    if (exact) {
        out["eigenvalues"] = report.exact_values;
    } else {
        json values = json::array();
        for (const double v : report.float_values)
            values.push_back(round12(v));
        out["eigenvalues"] = std::move(values);
    }
    out["multiplicities"] = multiplicities_json(report.multiplicities(), exact);
    return out;
}

json exactness_json(const AbelianGroup& g, const ExactnessReport& report) {
    json out;
    out["group"] = to_string(g);
    out["r"] = report.r;
    out["bound"] = report.bound;
    out["achieved"] = report.achieved;
    out["equal"] = report.equal;
    return out;
}

json count_json(const AbelianGroup& g, std::int64_t r_partition, std::int64_t r_formula) {
    json out;
    out["group"] = to_string(g);
    out["r"] = r_partition;
    out["r_formula"] = r_formula;
    out["family_size_log2"] = r_partition;
    if (r_partition <= 62)
        out["family_size"] = std::int64_t{1} << r_partition;
    return out;
}

std::string adjacency_csv(const Eigen::MatrixXi& a) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j > 0)
                out << ',';
            out << a(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string adjacency_dot(const ConnectionSet& s, std::int64_t cap) {
    const AbelianGroup& g = s.group();
    const std::int64_t n = g.order();
    if (n > cap)
        throw resource_limit_error("group order " + std::to_string(n) +
                                   " exceeds the dense-matrix cap " + std::to_string(cap));
    std::ostringstream out;
    out << "graph cayley {\n";
    for (std::int64_t x = 0; x < n; ++x)
        out << "  v" << x << " [label=\"" << to_string(g.element_at(x)) << "\"];\n";
    for (std::int64_t x = 0; x < n; ++x) {
        const GroupElement ex = g.element_at(x);
        for (const GroupElement& step : s.elements()) {
            const std::int64_t y = g.index_of(add(g, ex, step));
            if (x < y)
                out << "  v" << x << " -- v" << y << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

namespace {

json family_entry_json(const FamilyEntry& entry) {
    json out;
    out["mask"] = entry.mask;
    out["size"] = entry.set_size;
    out["degree"] = entry.degree;
    out["connected"] = entry.connected;
    out["empty"] = entry.empty;
    json spec = json::array();
    for (const auto& [value, count] : entry.spectrum_multiplicities)
        spec.push_back(json{{"value", value}, {"count", count}});
    out["spectrum"] = std::move(spec);
    return out;
}

std::string spectrum_brief(const FamilyEntry& entry) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [value, count] : entry.spectrum_multiplicities) {
        if (!first)
            out << ' ';
        out << value << '^' << count;
        first = false;
    }
    return out.str();
}

} // namespace

std::string family_jsonl(const IntegralFamilyReport& report) {
    std::ostringstream out;
    for (const FamilyEntry& entry : report.entries)
        out << family_entry_json(entry).dump() << '\n';
    return out.str();
}

std::string family_csv(const IntegralFamilyReport& report) {
    std::ostringstream out;
    out << "mask,size,degree,connected,empty,spectrum\n";
    for (const FamilyEntry& entry : report.entries)
        out << entry.mask << ',' << entry.set_size << ',' << entry.degree << ','
            << (entry.connected ? 1 : 0) << ',' << (entry.empty ? 1 : 0) << ",\""
            << spectrum_brief(entry) << "\"\n";
    return out.str();
}

std::string family_table(const IntegralFamilyReport& report) {
    std::ostringstream out;
    out << "group " << to_string(report.group) << "  r " << report.r << "  integral graphs "
        << report.total << '\n';
    out << "mask\tsize\tdegree\tconnected\tspectrum\n";
    for (const FamilyEntry& entry : report.entries)
        out << entry.mask << '\t' << entry.set_size << '\t' << entry.degree << '\t'
            << (entry.connected ? "yes" : "no") << '\t' << spectrum_brief(entry) << '\n';
    return out.str();
}

} // namespace cayley
