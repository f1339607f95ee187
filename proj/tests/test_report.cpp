#include "knotperiod/report.hpp"
#include "knotperiod/catalog.hpp"
#include "knotperiod/errors.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace knotperiod;

TEST_CASE("catalog entries are well-formed") {
    REQUIRE(catalog().size() == 4);
    CHECK(catalog_find("trefoil") != nullptr);
    CHECK(catalog_find("figure8") != nullptr);
    CHECK(catalog_find("6_2") != nullptr);
    CHECK(catalog_find("9_1") != nullptr);
    CHECK(catalog_find("no_such") == nullptr);
    for (const auto& e : catalog()) {
        std::int64_t at_one = 0;
        for (std::int64_t c : e.alexander)
            at_one += c;
        CHECK((at_one == 1 || at_one == -1));
        CHECK(e.two_bridge);
        CHECK_FALSE(e.presentation.empty());
    }
}

TEST_CASE("trefoil analysis end to end") {
    AnalyzeOptions opt;
    opt.prime = 3;
    AnalysisReport r = analyze_catalog("trefoil", opt);
    CHECK(r.knot == "trefoil");
    CHECK(r.prime == 3);
    CHECK(r.alexander_mod_p == Poly::from_ints(PrimeField(3), {1, -1, 1}));
    CHECK(r.order_of_J == 6);
    CHECK(r.predicted.periods == std::vector<std::uint64_t>{1, 2, 6});
    CHECK(r.predicted.exact);
    CHECK(r.verified);
    CHECK(r.census.period_set == std::vector<std::uint64_t>{1, 2, 6});
    CHECK(r.census.orbit_counts ==
          std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {6, 1}});
    CHECK(r.verdict == "MATCH");
}

TEST_CASE("verification can be switched off") {
    AnalyzeOptions opt;
    opt.prime = 3;
    opt.verify = false;
    AnalysisReport r = analyze_catalog("figure8", opt);
    CHECK_FALSE(r.verified);
    CHECK(r.verdict == "PREDICTED_ONLY");
    CHECK(r.predicted.periods == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("presentations and stored polynomials agree for every catalog knot") {
    // the relator words are independent data; this pins them to the
    // polynomial route at two primes
    for (const auto& e : catalog()) {
        for (std::uint64_t p : {2ull, 3ull}) {
            AnalyzeOptions opt;
            opt.prime = p;
            AnalysisReport from_poly = analyze_polynomial(e.name, e.alexander, opt);
            AnalysisReport from_pres = analyze_presentation(e.name, e.presentation, opt);
            CAPTURE(e.name);
            CAPTURE(p);
            // determinants agree up to a unit power of t
            Poly a = from_poly.alexander_mod_p.monic();
            Poly b = from_pres.alexander_mod_p.monic();
            CHECK(a.shifted_down(a.t_multiplicity()) == b.shifted_down(b.t_multiplicity()));
            CHECK(from_poly.predicted.periods == from_pres.predicted.periods);
            CHECK(from_poly.census.period_set == from_pres.census.period_set);
            CHECK(from_poly.census.exact_counts == from_pres.census.exact_counts);
            CHECK(from_poly.order_of_J == from_pres.order_of_J);
            CHECK(from_pres.verdict == "MATCH");
        }
    }
}

TEST_CASE("non-knot polynomials are rejected") {
    AnalyzeOptions opt;
    opt.prime = 3;
    CHECK_THROWS_AS(analyze_polynomial("bad", {1, 1}, opt), NotKnotDeterminant);
    CHECK_THROWS_AS(analyze_polynomial("zero", {}, opt), NotKnotDeterminant);
    CHECK_THROWS_AS(analyze_polynomial("even", {2, -3, 3}, opt), NotKnotDeterminant);
}

TEST_CASE("degenerate reductions are normalized and noted") {
    AnalyzeOptions opt;
    opt.prime = 3;
    SUBCASE("leading coefficient vanishes mod p") {
        // 1 - 3t + 3t^2: value 1 at t=1, degree drops to 0 mod 3
        AnalysisReport r = analyze_polynomial("drop", {1, -3, 3}, opt);
        CHECK(r.alexander_mod_p == Poly::constant(PrimeField(3), 1));
        CHECK(r.predicted.periods == std::vector<std::uint64_t>{1});
        CHECK(r.order_of_J == 1);
        CHECK(r.verdict == "MATCH");
        bool noted = false;
        for (const auto& n : r.notes)
            noted = noted || n.find("degree drop") != std::string::npos;
        CHECK(noted);
    }
    SUBCASE("constant term vanishes mod p") {
        // 3 - 5t + 3t^2: value 1 at t=1; mod 3 it is 1*t, so t is stripped
        AnalysisReport r = analyze_polynomial("strip", {3, -5, 3}, opt);
        CHECK(r.alexander_mod_p == Poly::constant(PrimeField(3), 1));
        CHECK(r.predicted.periods == std::vector<std::uint64_t>{1});
        CHECK(r.census.orbit_counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
        bool noted = false;
        for (const auto& n : r.notes)
            noted = noted || n.find("divided by t") != std::string::npos;
        CHECK(noted);
    }
}

TEST_CASE("figure-8 mod 2 keeps its sign conventions straight") {
    // -1 + 3t - t^2 reduces to 1 + t + t^2 mod 2, irreducible with root order 3
    AnalyzeOptions opt;
    opt.prime = 2;
    AnalysisReport r = analyze_catalog("figure8", opt);
    CHECK(r.alexander_mod_p == Poly::from_ints(PrimeField(2), {1, 1, 1}));
    CHECK(r.predicted.periods == std::vector<std::uint64_t>{1, 3});
    CHECK(r.verdict == "MATCH");
}

TEST_CASE("text report carries the headline facts") {
    AnalyzeOptions opt;
    opt.prime = 3;
    AnalysisReport r = analyze_catalog("trefoil", opt);
    std::string text = report_text(r);
    CHECK(text.find("trefoil") != std::string::npos);
    CHECK(text.find("{1, 2, 6}") != std::string::npos);
    CHECK(text.find("MATCH") != std::string::npos);
    CHECK(text.find("order of shift:  6") != std::string::npos);
    CHECK(text.find("(t + 1)^2") != std::string::npos);
}

TEST_CASE("json reports round-trip byte for byte") {
    for (const char* name : {"trefoil", "figure8", "6_2", "9_1"}) {
        AnalyzeOptions opt;
        opt.prime = 3;
        AnalysisReport r = analyze_catalog(name, opt);
        std::string emitted = report_json(r);
        nlohmann::json parsed = nlohmann::json::parse(emitted);
        CHECK(parsed.dump(2) + "\n" == emitted);
        // pinned schema
        for (const char* key :
             {"knot", "prime", "alexander_mod_p", "invariant_polynomials", "spectrum",
              "order_of_J", "predicted_periods", "exact", "oracle_periods",
              "orbit_counts", "verdict"})
            CHECK(parsed.contains(key));
        CHECK(parsed["knot"] == name);
        CHECK(parsed["prime"] == 3);
    }
}

TEST_CASE("json null oracle fields when verification is off") {
    AnalyzeOptions opt;
    opt.prime = 5;
    opt.verify = false;
    AnalysisReport r = analyze_catalog("trefoil", opt);
    nlohmann::json parsed = nlohmann::json::parse(report_json(r));
    CHECK(parsed["oracle_periods"].is_null());
    CHECK(parsed["orbit_counts"].is_null());
    CHECK(parsed["verdict"] == "PREDICTED_ONLY");
}

TEST_CASE("seed does not change the outcome") {
    AnalyzeOptions a, b;
    a.prime = b.prime = 7;
    b.seed = 12345;
    AnalysisReport ra = analyze_catalog("6_2", a);
    AnalysisReport rb = analyze_catalog("6_2", b);
    CHECK(ra.predicted.periods == rb.predicted.periods);
    CHECK(ra.alexander_factors.parts == rb.alexander_factors.parts);
    CHECK(report_json(ra) == report_json(rb));
}

TEST_CASE("enumerated orbits are attached on request") {
    AnalyzeOptions opt;
    opt.prime = 3;
    opt.enumerate = true;
    AnalysisReport r = analyze_catalog("trefoil", opt);
    REQUIRE(r.orbits.has_value());
    CHECK(r.orbits->size() == 3);
    std::string text = report_text(r);
    CHECK(text.find("0 1 1 0 2 2") != std::string::npos);
}

TEST_CASE("unknown catalog names raise errors") {
    AnalyzeOptions opt;
    opt.prime = 3;
    CHECK_THROWS_AS(analyze_catalog("granny", opt), Error);
}
