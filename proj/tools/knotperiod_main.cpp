// knotperiod: orbit periods of knot-group representation shifts over GF(p).
//
// Subcommands:
//   analyze  - run the full pipeline for one knot and one prime
//   catalog  - list the built-in knots
//   sweep    - run analyze across several primes, tabulate the verdicts
//
// Exit codes: 0 success, 1 input or usage error, 2 oracle mismatch.

#include "knotperiod/catalog.hpp"
#include "knotperiod/errors.hpp"
#include "knotperiod/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::istringstream in(s);
    std::int64_t v;
    while (in >> v)
        out.push_back(v);
    if (!in.eof())
        throw knotperiod::Error("cannot parse integer list '" + s + "'");
    return out;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::istringstream in(s);
    std::uint64_t v;
    while (in >> v)
        out.push_back(v);
    if (!in.eof())
        throw knotperiod::Error("cannot parse prime list '" + s + "'");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw knotperiod::Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string joined(const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

struct AnalyzeArgs {
    std::string knot;
    std::string presentation_file;
    std::string alexander;
    std::uint64_t prime = 0;
    bool no_verify = false;
    bool json = false;
    bool enumerate = false;
    std::uint64_t seed = knotperiod::kDefaultFactorSeed;
};

knotperiod::AnalysisReport run_one(const AnalyzeArgs& a) {
    knotperiod::AnalyzeOptions opt;
    opt.prime = a.prime;
    opt.verify = !a.no_verify;
    opt.seed = a.seed;
    opt.enumerate = a.enumerate;
    if (!a.knot.empty()) {
        const knotperiod::CatalogEntry* e = knotperiod::catalog_find(a.knot);
        if (!e)
            throw knotperiod::Error("unknown catalog knot '" + a.knot +
                                    "' (see the catalog subcommand)");
        return knotperiod::analyze_catalog(a.knot, opt);
    }
    if (!a.presentation_file.empty())
        return knotperiod::analyze_presentation(a.presentation_file,
                                                read_file(a.presentation_file), opt);
    return knotperiod::analyze_polynomial("custom", parse_int_list(a.alexander), opt);
}

int cmd_analyze(const AnalyzeArgs& a) {
    knotperiod::AnalysisReport r = run_one(a);
    if (a.json)
        std::cout << knotperiod::report_json(r);
    else
        std::cout << knotperiod::report_text(r);
    return r.verdict == "MISMATCH" ? 2 : 0;
}

int cmd_catalog(bool json, const std::string& only) {
    std::vector<const knotperiod::CatalogEntry*> entries;
    if (!only.empty()) {
        const knotperiod::CatalogEntry* e = knotperiod::catalog_find(only);
        if (!e)
            throw knotperiod::Error("unknown catalog knot '" + only + "'");
        entries.push_back(e);
    } else {
        for (const auto& e : knotperiod::catalog())
            entries.push_back(&e);
    }
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto* e : entries) {
            nlohmann::json je;
            je["name"] = e->name;
            je["alexander"] = e->alexander;
            je["two_bridge"] = e->two_bridge;
            je["has_presentation"] = !e->presentation.empty();
            out.push_back(je);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto* e : entries) {
        knotperiod::IntLaurentPoly poly;
        for (std::size_t i = 0; i < e->alexander.size(); ++i)
            poly.add_term(static_cast<std::int64_t>(i), e->alexander[i]);
        std::cout << std::left << std::setw(10) << e->name << " Delta = " << poly.str()
                  << (e->two_bridge ? "  [two-bridge]" : "") << "\n";
        if (!only.empty() && !e->presentation.empty())
            std::cout << "presentation:\n" << e->presentation;
    }
    return 0;
}

int cmd_sweep(const std::string& primes_arg, const std::string& knot, bool all,
              std::uint64_t seed) {
    std::vector<std::uint64_t> primes = parse_prime_list(primes_arg);
    if (primes.empty())
        throw knotperiod::Error("empty prime list");
    std::vector<std::string> names;
    if (all) {
        for (const auto& e : knotperiod::catalog())
            names.push_back(e.name);
    } else {
        if (!knotperiod::catalog_find(knot))
            throw knotperiod::Error("unknown catalog knot '" + knot + "'");
        names.push_back(knot);
    }

    std::cout << std::left << std::setw(10) << "knot" << std::setw(6) << "p"
              << std::setw(28) << "periods" << std::setw(10) << "verdict"
              << "notes\n";
    bool mismatch = false;
    for (const auto& name : names) {
        for (std::uint64_t p : primes) {
            knotperiod::AnalyzeOptions opt;
            opt.prime = p;
            opt.seed = seed;
            knotperiod::AnalysisReport r = knotperiod::analyze_catalog(name, opt);
            if (r.verdict == "MISMATCH")
                mismatch = true;
            std::string notes;
            for (const auto& n : r.notes) {
                if (n.find("cross-check") != std::string::npos)
                    continue; // routine confirmation, not worth a table cell
                if (!notes.empty())
                    notes += "; ";
                notes += n;
            }
            std::cout << std::left << std::setw(10) << name << std::setw(6) << p
                      << std::setw(28) << joined(r.census.period_set) << std::setw(10)
                      << r.verdict << notes << "\n";
        }
    }
    return mismatch ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit periods of knot-group representation shifts over GF(p)"};
    app.require_subcommand(1);

    AnalyzeArgs a;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one knot at one prime");
    auto* g = analyze->add_option_group("input", "input source");
    g->add_option("--knot", a.knot, "catalog knot name");
    g->add_option("--presentation", a.presentation_file, "presentation file");
    g->add_option("--alexander", a.alexander,
                  "integer coefficients, low degree first, e.g. \"1 -1 1\"");
    g->require_option(1);
    analyze->add_option("--prime", a.prime, "prime p")->required();
    analyze->add_flag("--no-verify", a.no_verify, "skip the oracle");
    analyze->add_flag("--json", a.json, "machine-readable report on stdout");
    analyze->add_flag("--enumerate", a.enumerate,
                      "list orbit representatives (text report, capped at 10^6 states)");
    analyze->add_option("--seed", a.seed, "factorization seed");

    bool cat_json = false;
    std::string cat_knot;
    CLI::App* catalog = app.add_subcommand("catalog", "list built-in knots");
    catalog->add_flag("--json", cat_json, "JSON listing");
    catalog->add_option("--knot", cat_knot, "show a single entry");

    std::string primes_arg, sweep_knot;
    bool sweep_all = false;
    std::uint64_t sweep_seed = knotperiod::kDefaultFactorSeed;
    CLI::App* sweep = app.add_subcommand("sweep", "analyze across several primes");
    sweep->add_option("--primes", primes_arg, "space-separated primes, e.g. \"2 3 5 7\"")
        ->required();
    auto* sg = sweep->add_option_group("knots", "knot selection");
    sg->add_option("--knot", sweep_knot, "catalog knot name");
    sg->add_flag("--all", sweep_all, "every catalog knot");
    sg->require_option(1);
    sweep->add_option("--seed", sweep_seed, "factorization seed");

    try {
        app.parse(argc, argv);
        if (*analyze)
            return cmd_analyze(a);
        if (*catalog)
            return cmd_catalog(cat_json, cat_knot);
        return cmd_sweep(primes_arg, sweep_knot, sweep_all, sweep_seed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const knotperiod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
