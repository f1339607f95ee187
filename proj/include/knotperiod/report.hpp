#pragma once

/**
 * @file report.hpp
 * @brief End-to-end analysis: input to period sets to verdict.
 *
 * Two entry points, one per input shape. Both run the formula side (Smith
 * form, Jordan spectrum, candidate periods) and, unless verification is
 * switched off, the brute-force census, then compare:
 *
 *   MATCH           predicted set equals the census set
 *   SUBSET          census is a strict subset and the input was not the
 *                   exact companion route
 *   MISMATCH        anything else; callers treat this as a hard failure
 *   PREDICTED_ONLY  verification was off
 *
 * For 1x1 systems the census is recomputed a second way, through powers of
 * the companion matrix, and the two oracle routes must agree.
 */

#include "knotperiod/dynsys.hpp"
#include "knotperiod/foxcalc.hpp"
#include "knotperiod/pencil.hpp"
#include "knotperiod/periods.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotperiod {

struct AnalyzeOptions {
    std::uint64_t prime = 0;                 ///< required
    bool verify = true;
    std::uint64_t seed = kDefaultFactorSeed; ///< equal-degree factorization seed
    bool enumerate = false;                  ///< list orbits in the text report (capped)
};

struct AnalysisReport {
    std::string knot;
    std::uint64_t prime = 0;
    std::string alexander_z;               ///< integer polynomial, display form
    Poly alexander_mod_p;                  ///< determinant of the normalized matrix
    Factorization alexander_factors;       ///< factorization of its monic form
    InvariantPolynomials invariants;
    JordanSpectrum spectrum;
    std::uint64_t order_of_J = 1;
    PeriodSet predicted;
    bool verified = false;
    OrbitCensus census;                    ///< meaningful when verified
    std::string verdict;                   ///< MATCH, SUBSET, MISMATCH, PREDICTED_ONLY
    std::vector<std::string> notes;
    std::optional<std::vector<Orbit>> orbits;  ///< only with options.enumerate
    double ms_setup = 0, ms_formula = 0, ms_oracle = 0;

    AnalysisReport(PrimeField F)
        : alexander_mod_p(F), spectrum{F, {}, 0, {}}, predicted{{1}, false, 1} {}
};

/// Companion route: integer Alexander coefficients, low degree first.
/// Validates the value at t=1 is +-1. The predicted set is exact.
AnalysisReport analyze_polynomial(const std::string& name,
                                  const std::vector<std::int64_t>& coeffs,
                                  const AnalyzeOptions& opt);

/// Presentation route: parse, Fox calculus, Smith form. Exact only when the
/// Alexander matrix turns out 1x1.
AnalysisReport analyze_presentation(const std::string& name,
                                    const std::string& text,
                                    const AnalyzeOptions& opt);

/// Catalog route: uses the stored polynomial. Throws Error for unknown names.
AnalysisReport analyze_catalog(const std::string& name, const AnalyzeOptions& opt);

std::string report_text(const AnalysisReport& r);

/// Pinned machine-readable schema; parse-and-redump is byte-identical.
std::string report_json(const AnalysisReport& r);

} // namespace knotperiod
