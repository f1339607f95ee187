#include "knotperiod/extfield.hpp"

#include "knotperiod/errors.hpp"
#include "knotperiod/intmath.hpp"

namespace knotperiod {

ExtField::ExtField(const Poly& f) : f_(f) {
    if (f.deg() < 1)
        throw NotIrreducible("extension modulus must have degree >= 1");
    if (!f.is_monic())
        throw NotMonic("extension modulus must be monic");
    if (!is_irreducible(f))
        throw NotIrreducible("extension modulus " + f.str() + " is reducible");
    size_ = pow_checked_u64(f.p(), static_cast<unsigned>(f.deg()));
}

Poly ExtField::gen() const {
    return reduce(Poly::t(base()));
}

Poly ExtField::reduce(const Poly& a) const {
    return a.deg() < f_.deg() ? a : poly_divmod(a, f_).second;
}

Poly ExtField::inv(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero())
        throw ZeroElement("inverse of zero in GF(p^d)");
    // extended Euclid on (f, r); f irreducible so the gcd is a constant
    Poly r0 = f_, r1 = r;
    Poly s0 = zero(), s1 = one();
    while (!r1.is_zero()) {
        auto [q, rem] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = rem;
        Poly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd = s_prev*f + s0*r, a nonzero constant
    std::uint64_t c = base().inv(r0[0]);
    return reduce(s0 * c);
}

Poly ExtField::pow(const Poly& a, std::int64_t e) const {
    Poly base_el = reduce(a);
    if (e < 0) {
        base_el = inv(base_el);
        e = -e;
    }
    Poly acc = one();
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1)
            acc = mul(acc, base_el);
        base_el = mul(base_el, base_el);
        k >>= 1;
    }
    return acc;
}

Poly ExtField::frobenius(const Poly& a) const {
    return pow(a, static_cast<std::int64_t>(base().p()));
}

std::uint64_t ExtField::mult_order(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero())
        throw ZeroElement("order of zero in GF(p^d)");
    std::uint64_t n = size_ - 1;
    for (auto [q, e] : factorize_u64(n)) {
        (void)e;
        while (n % q == 0 && pow(r, static_cast<std::int64_t>(n / q)) == one())
            n /= q;
    }
    return n;
}

std::vector<Poly> ExtField::frobenius_orbit(const Poly& a) const {
    std::vector<Poly> orbit{reduce(a)};
    for (;;) {
        Poly next = frobenius(orbit.back());
        if (next == orbit.front())
            return orbit;
        orbit.push_back(next);
        if (orbit.size() > degree())
            throw InternalError("frobenius orbit exceeded field degree");
    }
}

} // namespace knotperiod
