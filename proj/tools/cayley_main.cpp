// Command-line front end. Exit codes: 0 success, 2 usage or parse error,
// 3 resource limit, 4 internal assertion failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "cayley/enumerate.hpp"
#include "cayley/export.hpp"
#include "cayley/oracle.hpp"

namespace {

struct Options {
    std::string group;
    std::string set_text;
    std::string format = "text";
    std::string output;
    double tolerance = 1e-6;
    std::uint64_t limit = std::uint64_t{1} << 20;
};

cayley::ConnectionSet parse_set(const cayley::AbelianGroup& g, const std::string& text) {
    std::vector<cayley::GroupElement> elements;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ','))
        elements.push_back(cayley::parse_element(g, token));
    return cayley::make_connection_set(g, std::move(elements));
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw cayley::precondition_error("cannot open output file: " + path);
    file << text;
}

std::string join_ids(const std::vector<std::int32_t>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        out << (i ? " " : "") << ids[i];
    return out.str();
}

std::string join_elements(const std::vector<cayley::GroupElement>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? " " : "") << cayley::to_string(xs[i]);
    return out.str();
}

void cmd_orbits(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const auto partition = cayley::orbit_partition(g);
    if (opt.format == "json") {
        emit(cayley::orbit_partition_json(partition).dump(2) + "\n", opt.output);
        return;
    }
    std::ostringstream out;
    out << "group " << cayley::to_string(g) << " order " << g.order() << " exponent "
        << g.exponent() << '\n';
    out << "r " << partition.r() << '\n';
    for (std::size_t id = 0; id < partition.orbits().size(); ++id) {
        const cayley::Orbit& orbit = partition.orbits()[id];
        out << "orbit " << id << " representative " << cayley::to_string(orbit.representative)
            << " order " << orbit.common_order << " size " << orbit.size() << " elements "
            << join_elements(orbit.elements) << '\n';
    }
    emit(out.str(), opt.output);
}

void cmd_is_integral(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const auto s = parse_set(g, opt.set_text);
    const auto verdict = cayley::is_integral(s, cayley::orbit_partition(g));
    if (opt.format == "json") {
        emit(cayley::verdict_json(s, verdict).dump(2) + "\n", opt.output);
        return;
    }
    std::ostringstream out;
    out << "integral " << (verdict.is_integral ? "true" : "false") << '\n';
    out << "orbits " << join_ids(verdict.covered_orbit_ids) << '\n';
    if (!verdict.residue.empty())
        out << "residue " << join_elements(verdict.residue) << '\n';
    emit(out.str(), opt.output);
}

void cmd_spectrum(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const auto s = parse_set(g, opt.set_text);
    const auto report = cayley::spectrum(s, cayley::orbit_partition(g));
    if (opt.format == "json") {
        emit(cayley::spectrum_json(s, report).dump(2) + "\n", opt.output);
        return;
    }
    std::ostringstream out;
    const bool exact = report.mode == cayley::SpectrumReport::Mode::exact_integer;
    out << "mode " << (exact ? "exact-integer" : "complex-float") << '\n';
    out << "integral " << (report.integral ? "true" : "false") << '\n';
    out << "orbits " << join_ids(report.orbit_ids) << '\n';
    out << "eigenvalues";
    if (exact) {
        for (const std::int64_t v : report.exact_values)
            out << ' ' << v;
    } else {
        char buffer[40];
        for (const double v : report.float_values) {
            std::snprintf(buffer, sizeof(buffer), "%.12g", v);
            out << ' ' << buffer;
        }
    }
    out << '\n';
    emit(out.str(), opt.output);
}

void cmd_count(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const std::int64_t r_direct = cayley::orbit_partition(g).r();
    const std::int64_t r_formula = cayley::count_orbits_formula(g);
    if (r_direct != r_formula)
        throw cayley::internal_error("orbit count mismatch: direct " + std::to_string(r_direct) +
                                     " vs formula " + std::to_string(r_formula));
    if (opt.format == "json") {
        emit(cayley::count_json(g, r_direct, r_formula).dump(2) + "\n", opt.output);
        return;
    }
    std::ostringstream out;
    out << "group " << cayley::to_string(g) << '\n';
    out << "r " << r_direct << '\n';
    out << "r_formula " << r_formula << '\n';
    if (r_direct <= 62)
        out << "integral_graphs " << (std::int64_t{1} << r_direct) << '\n';
    else
        out << "integral_graphs 2^" << r_direct << '\n';
    emit(out.str(), opt.output);
}

void cmd_enumerate(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const auto partition = cayley::orbit_partition(g);
    const auto report = cayley::enumerate_integral(g, partition, opt.limit);
    if (opt.format == "json")
        emit(cayley::family_jsonl(report), opt.output);
    else if (opt.format == "csv")
        emit(cayley::family_csv(report), opt.output);
    else
        emit(cayley::family_table(report), opt.output);
}

void cmd_exactness(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const auto report = cayley::exactness_check(g, opt.tolerance);
    if (opt.format == "json") {
        emit(cayley::exactness_json(g, report).dump(2) + "\n", opt.output);
        return;
    }
    std::ostringstream out;
    out << "group " << cayley::to_string(g) << '\n';
    out << "r " << report.r << '\n';
    out << "bound " << report.bound << '\n';
    out << "achieved " << report.achieved << '\n';
    out << "equal " << (report.equal ? "true" : "false") << '\n';
    emit(out.str(), opt.output);
}

void cmd_export(const Options& opt) {
    const auto g = cayley::parse_group(opt.group);
    const auto s = parse_set(g, opt.set_text);
    if (opt.format == "csv")
        emit(cayley::adjacency_csv(cayley::adjacency_matrix(s)), opt.output);
    else
        emit(cayley::adjacency_dot(s), opt.output);
}

void cmd_selftest() {
    std::size_t failures = 0;
    const auto check = [&failures](bool ok, const std::string& label) {
        std::cout << (ok ? "ok   " : "FAIL ") << label << '\n';
        if (!ok)
            ++failures;
    };

    // Orbit-union test vs numerical spectra, exhaustive over symmetric subsets.
    for (const auto& factors : std::vector<std::vector<std::int64_t>>{
             {4}, {5}, {6}, {8}, {9}, {12}, {2, 2}, {2, 3}, {2, 2, 2}}) {
        const cayley::AbelianGroup g(factors);
        const auto partition = cayley::orbit_partition(g);
        const auto slots = cayley::symmetric_slots(g);
        bool ok = true;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.count()); ++mask) {
            const auto s = cayley::connection_set_from_slots(g, slots, mask);
            const bool combinatorial = cayley::is_integral(s, partition).is_integral;
            const auto eigenvalues =
                cayley::eigenvalues_numeric(cayley::adjacency_matrix(s).cast<double>());
            const bool numerical = cayley::near_integral(eigenvalues, 1e-6).integral;
            if (combinatorial != numerical)
                ok = false;
        }
        check(ok, "orbit-union criterion matches the oracle on " + cayley::to_string(g));
    }

    // Orbit count: direct partition vs divisor-lattice formula.
    {
        bool ok = true;
        for (std::int64_t n = 2; n <= 40; ++n) {
            const cayley::AbelianGroup g({n});
            ok = ok && cayley::orbit_partition(g).r() == cayley::count_orbits_formula(g);
        }
        for (const auto& factors : std::vector<std::vector<std::int64_t>>{
                 {2, 2}, {2, 4}, {3, 3}, {4, 6}, {2, 2, 2}, {2, 3, 4}})
            ok = ok && cayley::orbit_partition(cayley::AbelianGroup(factors)).r() ==
                           cayley::count_orbits_formula(cayley::AbelianGroup(factors));
        check(ok, "orbit count agrees between both routes");
    }

    // Character matrix: row sums -1, full numerical rank.
    for (const auto& factors :
         std::vector<std::vector<std::int64_t>>{{4}, {2, 3}, {8}, {2, 2, 2}}) {
        const cayley::AbelianGroup g(factors);
        const auto gamma = cayley::character_matrix(g);
        bool ok = true;
        for (Eigen::Index i = 0; i < gamma.gamma.rows(); ++i)
            ok = ok && std::abs(gamma.gamma.row(i).sum() - std::complex<double>(-1.0)) < 1e-9;
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gamma.gamma);
        ok = ok && svd.singularValues().minCoeff() >
                       1e-8 * static_cast<double>(g.order());
        check(ok, "character matrix fixture on " + cayley::to_string(g));
    }

    // Cyclic case: orbits are exactly the divisor classes.
    {
        bool ok = true;
        for (std::int64_t n = 2; n <= 30; ++n)
            ok = ok && cayley::cyclic_orbits_equal_divisor_classes(n).equal;
        check(ok, "cyclic orbits equal divisor classes up to 30");
    }

    // Enumerated family spectra match the oracle eigenvalues.
    {
        const cayley::AbelianGroup g({12});
        const auto partition = cayley::orbit_partition(g);
        const auto family = cayley::enumerate_integral(g, partition);
        bool ok = family.entries.size() == family.total;
        for (const auto& entry : family.entries) {
            const auto s = cayley::connection_set_from_orbits(g, partition, entry.mask);
            const auto eigenvalues =
                cayley::eigenvalues_numeric(cayley::adjacency_matrix(s).cast<double>());
            ok = ok && cayley::near_integral(eigenvalues, 1e-6).integral;
        }
        check(ok, "enumerated family on 12 is integral by the oracle");
    }

    if (failures > 0)
        throw cayley::internal_error(std::to_string(failures) + " selftest case(s) failed");
    std::cout << "selftest passed\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral Cayley graphs on finite abelian groups"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI/TOML file (flags win)");

    Options opt;

    const auto add_group = [&opt](CLI::App* cmd) {
        cmd->add_option("group", opt.group, "comma-separated cyclic factors, e.g. 4,6")
            ->required();
    };
    const auto add_set = [&opt](CLI::App* cmd) {
        cmd->add_option("--set", opt.set_text,
                        "connection set: elements joined by ',', coordinates by ':' "
                        "(e.g. 1:0,0:1); empty when omitted");
    };
    const auto add_output = [&opt](CLI::App* cmd) {
        cmd->add_option("-o,--output", opt.output, "write to a file instead of stdout");
    };
    const auto add_format = [&opt, &add_output](CLI::App* cmd,
                                                const std::vector<std::string>& allowed) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(allowed));
        add_output(cmd);
    };

    auto* orbits = app.add_subcommand("orbits", "Galois orbit partition of G \\ {0}");
    add_group(orbits);
    add_format(orbits, {"text", "json"});
    orbits->callback([&opt] { cmd_orbits(opt); });

    auto* integral = app.add_subcommand("is-integral", "decide integrality of D(G,S)");
    add_group(integral);
    add_set(integral);
    add_format(integral, {"text", "json"});
    integral->callback([&opt] { cmd_is_integral(opt); });

    auto* spec = app.add_subcommand("spectrum", "eigenvalues of D(G,S) in group order");
    add_group(spec);
    add_set(spec);
    add_format(spec, {"text", "json"});
    spec->callback([&opt] { cmd_spectrum(opt); });

    auto* count = app.add_subcommand("count", "orbit count r(G) by both routes and 2^r");
    add_group(count);
    add_format(count, {"text", "json"});
    count->callback([&opt] { cmd_count(opt); });

    auto* enumerate = app.add_subcommand("enumerate", "all 2^r integral Cayley graphs on G");
    add_group(enumerate);
    enumerate->add_option("--limit", opt.limit, "refuse to enumerate more graphs than this")
        ->capture_default_str();
    add_format(enumerate, {"text", "json", "csv"});
    enumerate->callback([&opt] { cmd_enumerate(opt); });

    auto* exactness = app.add_subcommand(
        "exactness-check", "sweep every symmetric subset; compare integral count with 2^r");
    add_group(exactness);
    exactness->add_option("--tolerance", opt.tolerance, "near-integrality tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(exactness, {"text", "json"});
    exactness->callback([&opt] { cmd_exactness(opt); });

    auto* export_cmd = app.add_subcommand("export", "adjacency matrix as CSV or DOT");
    add_group(export_cmd);
    add_set(export_cmd);
    export_cmd->add_option("--format", opt.format, "csv or dot")
        ->required()
        ->check(CLI::IsMember({"csv", "dot"}));
    add_output(export_cmd);
    export_cmd->callback([&opt] { cmd_export(opt); });

    auto* selftest = app.add_subcommand("selftest", "oracle suite on built-in small groups");
    selftest->callback([] { cmd_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cayley::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cayley::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const cayley::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
