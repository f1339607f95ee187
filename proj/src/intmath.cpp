#include "knotperiod/intmath.hpp"

#include "knotperiod/errors.hpp"

#include <algorithm>
#include <numeric>

namespace knotperiod {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t mul_checked_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow("64-bit multiply overflow");
    return r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0)
        throw Error("lcm of zero");
    return mul_checked_u64(a / std::gcd(a, b), b);
}

std::uint64_t pow_checked_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1)
            r = mul_checked_u64(r, base);
        exp >>= 1;
        if (exp)
            base = mul_checked_u64(base, base);
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    if (n == 0)
        throw Error("factorize 0");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto strip = [&](std::uint64_t q) {
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e)
            out.emplace_back(q, e);
    };
    strip(2);
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        strip(d);
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (auto [q, e] : factorize_u64(n)) {
        std::size_t base = divs.size();
        std::uint64_t qk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            qk = mul_checked_u64(qk, q);
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * qk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int mobius_u64(std::uint64_t n) {
    auto fac = factorize_u64(n);
    for (auto [q, e] : fac)
        if (e > 1)
            return 0;
    return fac.size() % 2 == 0 ? 1 : -1;
}

} // namespace knotperiod
