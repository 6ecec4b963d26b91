#pragma once

#include <string>

#include <json.hpp>

#include "cayley/enumerate.hpp"
#include "cayley/orbits.hpp"
#include "cayley/spectrum.hpp"

// Machine-readable renderings. Key order is fixed (ordered_json) and float
// values are rounded to 12 significant digits, so identical inputs always
// serialize byte-identically.

namespace cayley {

using json = nlohmann::ordered_json;

/// Round to 12 significant digits; exact integers stay exact.
double round12(double x);

json orbit_partition_json(const OrbitPartition& partition);

json verdict_json(const ConnectionSet& s, const IntegralityVerdict& verdict);

json spectrum_json(const ConnectionSet& s, const SpectrumReport& report);

json exactness_json(const AbelianGroup& g, const ExactnessReport& report);

json count_json(const AbelianGroup& g, std::int64_t r_partition, std::int64_t r_formula);

/// One 0/1 row per line, comma-separated.
std::string adjacency_csv(const Eigen::MatrixXi& a);

/// Undirected DOT graph, vertices labeled by coordinates ("1:0").
std::string adjacency_dot(const ConnectionSet& s, std::int64_t cap = kDefaultDenseMatrixCap);

/// One JSON object per line, bitmask order.
std::string family_jsonl(const IntegralFamilyReport& report);

std::string family_csv(const IntegralFamilyReport& report);

/// Human-readable summary table.
std::string family_table(const IntegralFamilyReport& report);

} // namespace cayley
