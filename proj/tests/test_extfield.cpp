#include "knotperiod/extfield.hpp"
#include "knotperiod/errors.hpp"

#include <doctest.h>

using namespace knotperiod;

namespace {

Poly make(PrimeField F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

} // namespace

TEST_CASE("GF(9) basics") {
    PrimeField F3(3);
    ExtField K(make(F3, {1, 0, 1})); // GF(3)[t]/(t^2+1)
    CHECK(K.degree() == 2);
    CHECK(K.size() == 9);
    CHECK(K.one() == Poly::constant(F3, 1));
    CHECK(K.zero().is_zero());

    Poly i = K.gen(); // class of t, a square root of -1
    CHECK(K.mul(i, i) == K.embed(2));
    CHECK(K.mult_order(i) == 4);
    CHECK(K.pow(i, 4) == K.one());
    CHECK(K.pow(i, -1) == K.mul(K.embed(2), i)); // i^-1 = -i
}

TEST_CASE("inverses across all of GF(8)") {
    PrimeField F2(2);
    ExtField K(make(F2, {1, 1, 0, 1})); // t^3 + t + 1, irreducible over GF(2)
    CHECK(K.size() == 8);
    int nonzero = 0;
    for (std::uint64_t c0 = 0; c0 < 2; ++c0)
        for (std::uint64_t c1 = 0; c1 < 2; ++c1)
            for (std::uint64_t c2 = 0; c2 < 2; ++c2) {
                Poly a(F2, {c0, c1, c2});
                if (a.is_zero())
                    continue;
                ++nonzero;
                CHECK(K.mul(a, K.inv(a)) == K.one());
                // GF(8)* is cyclic of prime order 7, so every element
                // except 1 generates
                CHECK(K.mult_order(a) == (a == K.one() ? 1 : 7));
            }
    CHECK(nonzero == 7);
    CHECK_THROWS_AS(K.inv(K.zero()), ZeroElement);
}

TEST_CASE("frobenius and its orbits") {
    PrimeField F3(3);
    ExtField K(make(F3, {1, 0, 1}));
    Poly i = K.gen();
    CHECK(K.frobenius(i) == K.mul(K.embed(2), i)); // i^3 = -i
    auto orbit = K.frobenius_orbit(i);
    REQUIRE(orbit.size() == 2); // conjugates i and -i
    CHECK(orbit[0] == i);
    CHECK(orbit[1] == K.mul(K.embed(2), i));
    // base-field elements are fixed
    CHECK(K.frobenius(K.embed(2)) == K.embed(2));
    CHECK(K.frobenius_orbit(K.embed(2)).size() == 1);
}

TEST_CASE("modulus validation") {
    PrimeField F3(3);
    CHECK_THROWS_AS(ExtField(make(F3, {1, 2, 1})), NotIrreducible); // (t+1)^2
    CHECK_THROWS_AS(ExtField(make(F3, {2, 0, 2})), NotMonic);
    CHECK_THROWS_AS(ExtField(Poly::constant(F3, 1)), NotIrreducible);
}

TEST_CASE("arithmetic reduces mod the defining polynomial") {
    PrimeField F5(5);
    ExtField K(make(F5, {2, 0, 1})); // t^2 + 2; -2 is not a square mod 5
    Poly a = make(F5, {1, 2});
    Poly b = make(F5, {3, 4});
    // (1+2t)(3+4t) = 3 + 10t + 8t^2 = 3 + 8(-2) = -13 = 2 mod 5
    CHECK(K.mul(a, b) == K.embed(2));
    CHECK(K.add(a, b) == make(F5, {4, 1}));
    CHECK(K.sub(a, b) == make(F5, {3, 3}));
}
