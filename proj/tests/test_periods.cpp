#include "knotperiod/periods.hpp"
#include "knotperiod/errors.hpp"

#include <doctest.h>

using namespace knotperiod;

namespace {

Poly make(PrimeField F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

GaloisOrbitData orbit(PrimeField F, std::vector<std::int64_t> factor, std::uint64_t d,
                      std::vector<unsigned> cells, unsigned r) {
    return GaloisOrbitData{make(F, factor), d, cells, cells.front(), r};
}

} // namespace

TEST_CASE("nilpotency exponent") {
    CHECK(r_exponent(1, 3) == 0);
    CHECK(r_exponent(2, 3) == 1);
    CHECK(r_exponent(3, 3) == 1);
    CHECK(r_exponent(4, 3) == 2);
    CHECK(r_exponent(8, 3) == 2);
    CHECK(r_exponent(9, 3) == 2);
    CHECK(r_exponent(10, 3) == 3);
    CHECK(r_exponent(1, 2) == 0);
    CHECK(r_exponent(5, 2) == 3);
}

TEST_CASE("cell orders") {
    CHECK(cell_order(2, 1, 3) == 2);
    CHECK(cell_order(2, 2, 3) == 6);   // lcm(2, 3)
    CHECK(cell_order(2, 8, 3) == 18);  // lcm(2, 9)
    CHECK(cell_order(4, 1, 3) == 4);
    CHECK(cell_order(3, 2, 2) == 6);
    CHECK(cell_order(1, 1, 5) == 1);
}

TEST_CASE("order of the shift") {
    PrimeField F(3);
    JordanSpectrum trefoil{F, {orbit(F, {1, 1}, 2, {2}, 1)}, 2, {0}};
    CHECK(order_of_shift(trefoil) == 6);

    JordanSpectrum empty{F, {}, 0, {}};
    CHECK(order_of_shift(empty) == 1);

    JordanSpectrum two{F, {orbit(F, {1, 1}, 2, {1}, 0), orbit(F, {1, 0, 1}, 4, {1}, 0)}, 4, {0}};
    CHECK(order_of_shift(two) == 4);
}

TEST_CASE("candidate periods for the catalog cases") {
    PrimeField F(3);
    SUBCASE("trefoil mod 3") {
        JordanSpectrum spec{F, {orbit(F, {1, 1}, 2, {2}, 1)}, 2, {0}};
        PeriodSet ps = candidate_period_set(spec, true);
        CHECK(ps.periods == std::vector<std::uint64_t>{1, 2, 6});
        CHECK(ps.exact);
        CHECK(ps.order_of_J == 6);
    }
    SUBCASE("9_1 mod 3") {
        JordanSpectrum spec{F, {orbit(F, {1, 1}, 2, {8}, 2)}, 8, {0}};
        PeriodSet ps = candidate_period_set(spec, true);
        CHECK(ps.periods == std::vector<std::uint64_t>{1, 2, 6, 18});
        CHECK(ps.order_of_J == 18);
    }
    SUBCASE("6_2 mod 3") {
        JordanSpectrum spec{
            F, {orbit(F, {2, 1, 1}, 8, {1}, 0), orbit(F, {2, 2, 1}, 8, {1}, 0)}, 4, {0}};
        PeriodSet ps = candidate_period_set(spec, true);
        CHECK(ps.periods == std::vector<std::uint64_t>{1, 8});
        CHECK(ps.order_of_J == 8);
    }
    SUBCASE("empty spectrum has only the fixed point") {
        JordanSpectrum spec{F, {}, 0, {}};
        PeriodSet ps = candidate_period_set(spec, true);
        CHECK(ps.periods == std::vector<std::uint64_t>{1});
        CHECK(ps.order_of_J == 1);
    }
}

TEST_CASE("menus combine by lcm closure across orbits") {
    PrimeField F(3);
    // root orders 2 and 4 in separate orbits: closure adds lcm(2,4) = 4,
    // so the set is {1, 2, 4} (4 already contains the lcm)
    JordanSpectrum spec{F, {orbit(F, {1, 1}, 2, {1}, 0), orbit(F, {1, 0, 1}, 4, {1}, 0)}, 4, {0}};
    PeriodSet ps = candidate_period_set(spec, false);
    CHECK(ps.periods == std::vector<std::uint64_t>{1, 2, 4});
    CHECK_FALSE(ps.exact);

    // coprime orders 2 and 13 force the combined period 26 into the set
    JordanSpectrum spec23{
        F, {orbit(F, {1, 1}, 2, {1}, 0), orbit(F, {2, 2, 2, 1}, 13, {1}, 0)}, 5, {0}};
    PeriodSet ps23 = candidate_period_set(spec23, false);
    CHECK(ps23.periods == std::vector<std::uint64_t>{1, 2, 13, 26});
    CHECK(ps23.order_of_J == 26);
}

TEST_CASE("multi-cell orbits refuse the companion claim") {
    PrimeField F(3);
    JordanSpectrum spec{F, {orbit(F, {1, 1}, 2, {2, 1}, 1)}, 3, {0}};
    CHECK_THROWS_AS(candidate_period_set(spec, true), NotCompanionShape);
    PeriodSet ps = candidate_period_set(spec, false);
    CHECK_FALSE(ps.exact);
    CHECK(ps.periods == std::vector<std::uint64_t>{1, 2, 6});
}
