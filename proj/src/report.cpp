#include "knotperiod/report.hpp"

#include "knotperiod/catalog.hpp"
#include "knotperiod/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace knotperiod {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string int_poly_str(const std::vector<std::int64_t>& c) {
    IntLaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        p.add_term(static_cast<std::int64_t>(i), c[i]);
    return p.str();
}

// Normalize a Laurent determinant for display: lowest exponent to zero,
// positive leading coefficient. Only defined up to a unit anyway.
std::string laurent_display(const IntLaurentPoly& q) {
    if (q.is_zero())
        return "0";
    IntLaurentPoly out;
    std::int64_t emin = q.terms().begin()->first;
    std::int64_t lead = q.terms().rbegin()->second;
    for (const auto& [e, c] : q.terms())
        out.add_term(e - emin, lead < 0 ? -c : c);
    return out.str();
}

std::string verdict_of(const PeriodSet& predicted, const OrbitCensus& census) {
    if (census.period_set == predicted.periods)
        return "MATCH";
    bool subset = std::includes(predicted.periods.begin(), predicted.periods.end(),
                                census.period_set.begin(), census.period_set.end());
    if (subset && !predicted.exact)
        return "SUBSET";
    return "MISMATCH";
}

AnalysisReport analyze_matrix(const std::string& name, const PolyMatrix& matrix,
                              const std::string& alex_z, std::vector<std::string> notes,
                              const AnalyzeOptions& opt, Clock::time_point t0) {
    const PrimeField F = matrix.field();
    AnalysisReport r(F);
    r.knot = name;
    r.prime = F.p();
    r.alexander_z = alex_z;
    r.notes = std::move(notes);
    r.ms_setup = ms_since(t0);

    const auto t1 = Clock::now();
    r.alexander_mod_p = poly_matrix_det(matrix);
    if (r.alexander_mod_p.is_zero())
        throw SingularMatrix("Alexander polynomial vanishes mod p");
    r.alexander_factors = [&] {
        std::mt19937_64 rng(opt.seed);
        return factor(r.alexander_mod_p, rng);
    }();
    r.invariants = smith_normal_form(matrix);
    r.spectrum = jordan_spectrum(r.invariants, F, opt.seed);
    for (std::size_t k = 0; k < r.spectrum.stripped_t.size(); ++k)
        if (r.spectrum.stripped_t[k] > 0)
            r.notes.push_back("stripped t^" + std::to_string(r.spectrum.stripped_t[k]) +
                              " from invariant polynomial i" + std::to_string(k + 1));

    const bool companion_route = matrix.rows() <= 1;
    r.predicted = candidate_period_set(r.spectrum, companion_route);
    r.order_of_J = r.predicted.order_of_J;
    r.ms_formula = ms_since(t1);

    if (opt.verify) {
        const auto t2 = Clock::now();
        RecurrenceSystem sys(matrix);
        r.census = orbit_census(sys, r.order_of_J);
        if (matrix.rows() == 1) {
            // second oracle route through the companion matrix
            OrbitCensus again = iterate_census(companion_matrix(matrix.at(0, 0)), r.order_of_J);
            if (again.period_set != r.census.period_set ||
                again.exact_counts != r.census.exact_counts)
                throw InconsistentCensus("cyclic-system census and companion-iterate census disagree");
            r.notes.push_back("oracle cross-check: companion-iterate census agrees");
        }
        r.verified = true;
        r.verdict = verdict_of(r.predicted, r.census);
        if (opt.enumerate)
            r.orbits = enumerate_orbits(sys, r.order_of_J);
        r.ms_oracle = ms_since(t2);
    } else {
        r.verdict = "PREDICTED_ONLY";
    }
    return r;
}

} // namespace

AnalysisReport analyze_polynomial(const std::string& name,
                                  const std::vector<std::int64_t>& coeffs,
                                  const AnalyzeOptions& opt) {
    const auto t0 = Clock::now();
    PrimeField F(opt.prime);

    std::int64_t at_one = 0;
    for (std::int64_t c : coeffs)
        at_one += c;
    if (at_one != 1 && at_one != -1)
        throw NotKnotDeterminant("polynomial value at t=1 is " + std::to_string(at_one) +
                                 ", expected +-1 for a knot polynomial");

    Poly reduced = Poly::from_ints(F, coeffs);
    std::vector<std::string> notes;
    int z_degree = -1;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            z_degree = static_cast<int>(i);
    if (reduced.deg() < z_degree)
        notes.push_back("degree drop mod " + std::to_string(F.p()) + ": " +
                        std::to_string(z_degree) + " -> " + std::to_string(reduced.deg()));
    unsigned tm = reduced.t_multiplicity();
    if (tm > 0) {
        reduced = reduced.shifted_down(tm);
        notes.push_back("constant term vanished mod " + std::to_string(F.p()) +
                        ": divided by t^" + std::to_string(tm));
    }

    PolyMatrix m(F, 1, 1);
    m.at(0, 0) = reduced;
    return analyze_matrix(name, m, int_poly_str(coeffs), std::move(notes), opt, t0);
}

AnalysisReport analyze_presentation(const std::string& name,
                                    const std::string& text,
                                    const AnalyzeOptions& opt) {
    const auto t0 = Clock::now();
    PrimeField F(opt.prime);
    Presentation pres = parse_presentation(text);
    LaurentMatrix am = alexander_matrix(pres);
    IntLaurentPoly det_z = laurent_det(am);
    NormalizedMatrix norm = reduce_normalize(am, F);
    std::vector<std::string> notes;
    if (norm.t_shift != 0)
        notes.push_back("multiplied matrix by t^" + std::to_string(norm.t_shift) +
                        " to normalize entries");
    return analyze_matrix(name, norm.matrix, laurent_display(det_z), std::move(notes), opt, t0);
}

AnalysisReport analyze_catalog(const std::string& name, const AnalyzeOptions& opt) {
    const CatalogEntry* e = catalog_find(name);
    if (!e)
        throw Error("unknown catalog knot '" + name + "'");
    return analyze_polynomial(e->name, e->alexander, opt);
}

namespace {

std::string period_list(const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

} // namespace

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "knot:            " << r.knot << "\n";
    out << "prime:           " << r.prime << "\n";
    out << "alexander (Z):   " << r.alexander_z << "\n";
    out << "alexander mod p: " << r.alexander_mod_p.str() << "\n";
    out << "factorization:   ";
    if (r.alexander_factors.unit != 1)
        out << r.alexander_factors.unit << " * ";
    for (std::size_t i = 0; i < r.alexander_factors.parts.size(); ++i) {
        const auto& [f, e] = r.alexander_factors.parts[i];
        if (i)
            out << " * ";
        out << "(" << f.str() << ")";
        if (e > 1)
            out << "^" << e;
    }
    out << "\n";
    out << "invariant polynomials:\n";
    for (std::size_t k = 0; k < r.invariants.ilist.size(); ++k)
        out << "  i" << k + 1 << " = " << r.invariants.ilist[k].str() << "\n";
    out << "jordan spectrum (dim " << r.spectrum.total_dim << "):\n";
    if (r.spectrum.orbits.empty())
        out << "  (empty)\n";
    for (const auto& orbit : r.spectrum.orbits) {
        out << "  factor " << orbit.factor.str() << ": root order " << orbit.order_d
            << ", cells";
        for (unsigned k : orbit.cell_sizes)
            out << " " << k;
        out << ", r = " << orbit.r << "\n";
    }
    out << "order of shift:  " << r.order_of_J << "\n";
    out << "predicted periods" << (r.predicted.exact ? " (exact)" : " (upper set)") << ": "
        << period_list(r.predicted.periods) << "\n";
    if (r.verified) {
        out << "oracle periods:  " << period_list(r.census.period_set) << "\n";
        out << "orbit counts:    ";
        bool first = true;
        for (const auto& [N, c] : r.census.orbit_counts) {
            if (!first)
                out << ", ";
            out << N << ": " << c;
            first = false;
        }
        out << "\n";
    }
    out << "verdict:         " << r.verdict << "\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
    if (r.orbits) {
        out << "orbits (" << r.orbits->size() << "):\n";
        for (const auto& o : *r.orbits) {
            out << "  period " << o.period << ":";
            for (auto v : o.window)
                out << " " << v;
            out << "\n";
        }
    } else if (r.verified) {
        std::uint64_t orbit_total = 0;
        for (const auto& [N, c] : r.census.orbit_counts)
            orbit_total += c;
        out << "orbits total:    " << orbit_total << "\n";
    }
    out << "timing: setup " << r.ms_setup << " ms, formula " << r.ms_formula
        << " ms, oracle " << r.ms_oracle << " ms\n";
    return out.str();
}

std::string report_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["knot"] = r.knot;
    j["prime"] = r.prime;
    j["alexander_mod_p"] = r.alexander_mod_p.coeffs();
    nlohmann::json invs = nlohmann::json::array();
    for (const auto& ik : r.invariants.ilist)
        invs.push_back(ik.coeffs());
    j["invariant_polynomials"] = invs;
    nlohmann::json spec = nlohmann::json::array();
    for (const auto& orbit : r.spectrum.orbits) {
        nlohmann::json o;
        o["factor"] = orbit.factor.coeffs();
        o["order"] = orbit.order_d;
        o["cells"] = orbit.cell_sizes;
        o["r"] = orbit.r;
        spec.push_back(o);
    }
    j["spectrum"] = spec;
    j["order_of_J"] = r.order_of_J;
    j["predicted_periods"] = r.predicted.periods;
    j["exact"] = r.predicted.exact;
    if (r.verified) {
        j["oracle_periods"] = r.census.period_set;
        nlohmann::json counts;
        for (const auto& [N, c] : r.census.orbit_counts)
            counts[std::to_string(N)] = c;
        j["orbit_counts"] = counts;
    } else {
        j["oracle_periods"] = nullptr;
        j["orbit_counts"] = nullptr;
    }
    j["verdict"] = r.verdict;
    return j.dump(2) + "\n";
}

} // namespace knotperiod
