#pragma once

/**
 * @file field.hpp
 * @brief Arithmetic in the prime field GF(p).
 *
 * Elements are least nonnegative residues stored as uint64_t. PrimeField is a
 * small value type wrapping the modulus; it validates primality at
 * construction and supplies all operations, in the style of a table-free
 * field object. Products go through 128-bit intermediates, so any prime with
 * p^2 < 2^127 is safe; practical inputs are desk scale.
 */

#include <cstdint>
#include <vector>

namespace knotperiod {

class PrimeField {
public:
    /// Throws NotPrime unless p is prime (trial division).
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    /// Least nonnegative residue of a possibly negative integer.
    std::uint64_t reduce(std::int64_t v) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    /// Multiplicative inverse; throws ZeroElement on 0.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// Multiplicative order of a nonzero residue; divides p-1.
    std::uint64_t mult_order(std::uint64_t a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

} // namespace knotperiod
