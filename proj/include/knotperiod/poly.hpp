#pragma once

/**
 * @file poly.hpp
 * @brief Univariate polynomials over GF(p) and their factorization.
 *
 * Coefficients are stored low degree first with no trailing zeros, so the
 * zero polynomial is the empty vector and deg() reports -1 for it. Division,
 * gcd, squarefree/distinct-degree/equal-degree factorization and the
 * Hasse-derivative binomial coefficients live here. Equal-degree splitting is
 * randomized (Cantor-Zassenhaus); callers either pass their own generator or
 * get a fixed seed, and the factor list is sorted, so results are
 * reproducible either way.
 */

#include "knotperiod/field.hpp"

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace knotperiod {

class Poly {
public:
    /// Zero polynomial over F.
    explicit Poly(PrimeField F) : F_(F) {}

    /// Coefficients low degree first; they are reduced and trimmed.
    Poly(PrimeField F, std::vector<std::uint64_t> coeffs);

    static Poly constant(PrimeField F, std::uint64_t c);
    static Poly t(PrimeField F);

    /// Build from signed integers (reduced mod p).
    static Poly from_ints(PrimeField F, const std::vector<std::int64_t>& c);

    const PrimeField& field() const { return F_; }
    std::uint64_t p() const { return F_.p(); }

    /// Degree, -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of t^i (0 beyond the degree).
    std::uint64_t operator[](std::size_t i) const {
        return i < c_.size() ? c_[i] : 0;
    }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    std::uint64_t lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator-() const;
    Poly operator*(const Poly&) const;
    Poly operator*(std::uint64_t scalar) const;

    /// Multiply by t^k.
    Poly shifted(unsigned k) const;

    bool operator==(const Poly&) const = default;

    /// Degree-then-coefficient ordering; gives factor lists a stable order.
    std::strong_ordering operator<=>(const Poly& o) const;

    std::uint64_t eval(std::uint64_t x) const;

    /// Formal derivative.
    Poly derivative() const;

    Poly monic() const;

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// factor t. Zero polynomial reports 0.
    unsigned t_multiplicity() const;

    /// Divide out t^k; requires t^k to divide.
    Poly shifted_down(unsigned k) const;

    /// Human-readable form like "t^2 + 2*t + 1".
    std::string str() const;

private:
    void trim();

    PrimeField F_;
    std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Exact division; throws InternalError if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Monic gcd; throws BothZero when both inputs vanish.
Poly poly_gcd(const Poly& a, const Poly& b);

/// a^e mod m.
Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& m);

struct Factorization {
    std::uint64_t unit;                            // leading coefficient of the input
    std::vector<std::pair<Poly, unsigned>> parts;  // monic irreducible, multiplicity

    /// unit * product of parts^multiplicity; used by the reconstruction tests.
    Poly product(PrimeField F) const;
};

/// Full factorization into monic irreducibles, deterministic output order
/// (sorted by degree, then by coefficient sequence). Throws ZeroPolynomial
/// on the zero input.
Factorization factor(const Poly& a, std::mt19937_64& rng);

/// Same with a fixed internal seed.
Factorization factor(const Poly& a);

/// Default seed used by the one-argument factor(); the CLI exposes it.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed5eed5eedULL;

/// Deterministic Rabin irreducibility test. Degree >= 1 required.
bool is_irreducible(const Poly& f);

/// Multiplicative order of the class of t in GF(p)[t]/(f); f must be monic
/// irreducible and not t itself (ZeroRoot). Equals the common multiplicative
/// order of the roots of f.
std::uint64_t root_order(const Poly& f);

/// Binomial coefficient C(n, k) mod p for any integer n (Hasse derivative
/// coefficients). Negative n uses C(n,k) = (-1)^k C(k-n-1, k).
std::uint64_t hasse_binomial(std::int64_t n, std::uint64_t k, PrimeField F);

} // namespace knotperiod
