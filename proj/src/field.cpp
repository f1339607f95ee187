#include "knotperiod/field.hpp"

#include "knotperiod/errors.hpp"
#include "knotperiod/intmath.hpp"

#include <string>

namespace knotperiod {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p))
        throw NotPrime("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0)
        m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::neg(std::uint64_t a) const {
    return a == 0 ? 0 : p_ - a;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0)
        throw ZeroElement("inverse of zero in GF(p)");
    // Fermat; p is prime by construction.
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::mult_order(std::uint64_t a) const {
    a %= p_;
    if (a == 0)
        throw ZeroElement("order of zero in GF(p)");
    std::uint64_t n = p_ - 1;
    for (auto [q, e] : factorize_u64(n)) {
        (void)e;
        while (n % q == 0 && pow(a, n / q) == 1)
            n /= q;
    }
    return n;
}

} // namespace knotperiod
