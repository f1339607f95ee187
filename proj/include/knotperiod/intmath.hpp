#pragma once

/**
 * @file intmath.hpp
 * @brief Unsigned 64-bit number theory helpers: gcd/lcm, checked powers,
 *        trial-division factorization, divisor lists, Moebius function.
 *
 * Everything here is exact. Operations that could leave the 64-bit range
 * throw Overflow instead of wrapping.
 */

#include <cstdint>
#include <utility>
#include <vector>

namespace knotperiod {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// lcm(a, b); throws Overflow if the result does not fit in 64 bits.
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// a * b with overflow check.
std::uint64_t mul_checked_u64(std::uint64_t a, std::uint64_t b);

/// base^exp with overflow check.
std::uint64_t pow_checked_u64(std::uint64_t base, std::uint64_t exp);

bool is_prime_u64(std::uint64_t n);

/// Prime factorization by trial division, (prime, exponent) pairs in
/// increasing prime order. n >= 1; the factorization of 1 is empty.
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

/// All divisors of n in increasing order.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

/// Moebius function: 0 on a squared factor, else (-1)^(number of primes).
int mobius_u64(std::uint64_t n);

} // namespace knotperiod
