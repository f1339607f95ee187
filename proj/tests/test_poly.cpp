#include "knotperiod/poly.hpp"
#include "knotperiod/errors.hpp"

#include <doctest.h>

#include <random>

using namespace knotperiod;

namespace {

Poly make(PrimeField F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

Poly random_poly(PrimeField F, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<std::uint64_t> dc(0, F.p() - 1);
    int d = dd(rng);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c)
        x = dc(rng);
    return Poly(F, c);
}

} // namespace

TEST_CASE("construction normalizes trailing zeros") {
    PrimeField F(3);
    Poly z(F, {0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.deg() == -1);
    Poly a(F, {1, 2, 3}); // 3 == 0 mod 3
    CHECK(a.deg() == 1);
    CHECK(a[0] == 1);
    CHECK(a[1] == 2);
    CHECK(a[5] == 0); // out-of-range coefficient reads as zero
    CHECK(Poly::constant(F, 5) == Poly(F, {2}));
    CHECK(Poly::t(F).deg() == 1);
}

TEST_CASE("ring operations") {
    PrimeField F(5);
    Poly a = make(F, {1, 2});      // 1 + 2t
    Poly b = make(F, {3, 0, 1});   // 3 + t^2
    CHECK(a + b == make(F, {4, 2, 1}));
    CHECK(b - a == make(F, {2, -2, 1}));
    CHECK(a * b == make(F, {3, 6, 1, 2}));
    CHECK(-a == make(F, {-1, -2}));
    CHECK(a * 3 == make(F, {3, 6}));
    CHECK(a.shifted(2) == make(F, {0, 0, 1, 2}));
    CHECK(b.eval(2) == 2); // 3 + 4
    CHECK(b.derivative() == make(F, {0, 2}));
    CHECK(make(F, {2, 4}).monic() == make(F, {3, 1})); // divide by the lead, 4

}

TEST_CASE("t-multiplicity and shifting down") {
    PrimeField F(3);
    Poly a = make(F, {0, 0, 1, 2}); // t^2 + 2t^3
    CHECK(a.t_multiplicity() == 2);
    CHECK(a.shifted_down(2) == make(F, {1, 2}));
    CHECK(make(F, {1}).t_multiplicity() == 0);
    CHECK(Poly(F).t_multiplicity() == 0);
}

TEST_CASE("division with remainder") {
    PrimeField F(7);
    Poly a = make(F, {2, 0, 3, 1});
    Poly b = make(F, {1, 1});
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
    CHECK(poly_divexact(a * b, b) == a);
    CHECK_THROWS_AS(poly_divmod(a, Poly(F)), ZeroPolynomial);
    CHECK_THROWS_AS(poly_divexact(make(F, {1, 1, 1}), b), InternalError);
}

TEST_CASE("gcd examples") {
    PrimeField F(3);
    Poly tp1 = make(F, {1, 1});
    CHECK(poly_gcd(make(F, {-1, 0, 1}), tp1) == tp1);          // t^2-1 vs t+1
    CHECK(poly_gcd(tp1 * tp1, tp1 * make(F, {2, 1})) == tp1);  // (t+1)^2 vs (t+1)(t+2)
    CHECK(poly_gcd(Poly(F), tp1 * 2) == tp1); // gcd with zero is the monic other
    CHECK_THROWS_AS(poly_gcd(Poly(F), Poly(F)), BothZero);
}

TEST_CASE("modular exponentiation") {
    PrimeField F(3);
    Poly f = make(F, {1, 0, 1}); // t^2 + 1
    Poly t = Poly::t(F);
    // t^4 = (t^2)^2 = (-1)^2 = 1 mod f
    CHECK(poly_powmod(t, 4, f) == make(F, {1}));
    CHECK(poly_powmod(t, 5, f) == t);
}

TEST_CASE("factorization of frozen examples") {
    PrimeField F3(3);
    SUBCASE("t^4 + 1 over GF(3) splits into two quadratics") {
        Factorization fa = factor(make(F3, {1, 0, 0, 0, 1}));
        REQUIRE(fa.parts.size() == 2);
        CHECK(fa.unit == 1);
        CHECK(fa.parts[0].first == make(F3, {2, 1, 1})); // t^2 + t + 2
        CHECK(fa.parts[0].second == 1);
        CHECK(fa.parts[1].first == make(F3, {2, 2, 1})); // t^2 + 2t + 2
        CHECK(fa.parts[1].second == 1);
    }
    SUBCASE("repeated linear factor") {
        Factorization fa = factor(make(F3, {1, 2, 1}));
        REQUIRE(fa.parts.size() == 1);
        CHECK(fa.parts[0].first == make(F3, {1, 1}));
        CHECK(fa.parts[0].second == 2);
    }
    SUBCASE("unit is the leading coefficient") {
        Factorization fa = factor(make(F3, {2, 0, 2})); // 2(t^2+1)
        CHECK(fa.unit == 2);
        REQUIRE(fa.parts.size() == 1);
        CHECK(fa.parts[0].first == make(F3, {1, 0, 1}));
    }
    SUBCASE("characteristic-2 repeated factors") {
        PrimeField F2(2);
        Factorization fa = factor(make(F2, {1, 0, 1})); // t^2+1 = (t+1)^2
        REQUIRE(fa.parts.size() == 1);
        CHECK(fa.parts[0].first == make(F2, {1, 1}));
        CHECK(fa.parts[0].second == 2);
    }
    SUBCASE("p-th powers recurse through the derivative-zero branch") {
        // (t+1)^9 over GF(3) has zero derivative at every level
        Poly f = make(F3, {1, 1});
        Poly g = Poly::constant(F3, 1);
        for (int i = 0; i < 9; ++i)
            g = g * f;
        Factorization fa = factor(g);
        REQUIRE(fa.parts.size() == 1);
        CHECK(fa.parts[0].first == f);
        CHECK(fa.parts[0].second == 9);
    }
}

TEST_CASE("random factorizations multiply back") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull}) {
        PrimeField F(p);
        for (int it = 0; it < 50; ++it) {
            Poly a = random_poly(F, 8, rng);
            if (a.is_zero())
                continue;
            Factorization fa = factor(a);
            CHECK(fa.product(F) == a);
            for (const auto& [f, e] : fa.parts) {
                CHECK(f.is_monic());
                CHECK(is_irreducible(f));
                CHECK(e >= 1);
            }
        }
    }
}

TEST_CASE("factorization is deterministic across seeds") {
    PrimeField F(5);
    Poly a = make(F, {1, 3, 0, 2, 4, 1});
    std::mt19937_64 r1(1), r2(999);
    Factorization f1 = factor(a, r1), f2 = factor(a, r2);
    CHECK(f1.unit == f2.unit);
    CHECK(f1.parts == f2.parts);
}

TEST_CASE("irreducibility") {
    PrimeField F3(3), F5(5), F2(2);
    CHECK(is_irreducible(Poly::t(F3)));
    CHECK(is_irreducible(make(F3, {1, 0, 1})));       // t^2+1, -1 not a square mod 3
    CHECK_FALSE(is_irreducible(make(F5, {1, 0, 1}))); // (t+2)(t+3) mod 5
    CHECK(is_irreducible(make(F2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible(make(F2, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(Poly::constant(F3, 2)));
}

TEST_CASE("root orders") {
    PrimeField F3(3), F2(2);
    CHECK(root_order(make(F3, {1, 1})) == 2);     // root -1
    CHECK(root_order(make(F3, {-1, 1})) == 1);    // root 1
    CHECK(root_order(make(F3, {1, 0, 1})) == 4);  // roots of t^2+1 in GF(9)
    CHECK(root_order(make(F3, {2, 1, 1})) == 8);  // factor of t^4+1
    CHECK(root_order(make(F3, {2, 2, 1})) == 8);
    CHECK(root_order(make(F2, {1, 1, 1})) == 3);
    CHECK_THROWS_AS(root_order(Poly::t(F3)), ZeroRoot);
    CHECK_THROWS_AS(root_order(make(F3, {2, 2})), NotMonic);
    CHECK_THROWS_AS(root_order(make(F3, {1, 2, 1})), NotIrreducible);
}

TEST_CASE("binomial coefficients with integer upper index") {
    PrimeField F3(3);
    CHECK(hasse_binomial(5, 2, F3) == 10 % 3);
    CHECK(hasse_binomial(4, 0, F3) == 1);
    CHECK(hasse_binomial(2, 5, F3) == 0);
    CHECK(hasse_binomial(-1, 2, F3) == 1);  // C(-1,k) = (-1)^k
    CHECK(hasse_binomial(-2, 3, F3) == F3.reduce(-4));
    // Lucas: C(7,3) = 35 = 1 mod 2
    CHECK(hasse_binomial(7, 3, PrimeField(2)) == 1);
    // Pascal identity across positive and negative upper index
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dn(-50, 50);
    std::uniform_int_distribution<std::uint64_t> dk(1, 40);
    for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        PrimeField F(p);
        for (int it = 0; it < 100; ++it) {
            std::int64_t n = dn(rng);
            std::uint64_t k = dk(rng);
            CHECK(hasse_binomial(n, k, F) ==
                  F.add(hasse_binomial(n - 1, k, F), hasse_binomial(n - 1, k - 1, F)));
        }
    }
}

TEST_CASE("display form") {
    PrimeField F(3);
    CHECK(make(F, {1, 2, 1}).str() == "t^2 + 2*t + 1");
    CHECK(make(F, {0, 1}).str() == "t");
    CHECK(Poly(F).str() == "0");
    CHECK(Poly::constant(F, 2).str() == "2");
}
