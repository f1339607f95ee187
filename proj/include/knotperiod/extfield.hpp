#pragma once

/**
 * @file extfield.hpp
 * @brief The extension field GF(p^d) presented as GF(p)[t]/(f).
 *
 * Elements are coordinate polynomials of degree < d over the base field,
 * and the field object supplies the operations, mirroring PrimeField. The
 * modulus must be monic irreducible; p^d has to fit in 64 bits, which is
 * the documented size limit of the whole artifact.
 */

#include "knotperiod/poly.hpp"

#include <cstdint>
#include <vector>

namespace knotperiod {

class ExtField {
public:
    /// Validates that f is monic and irreducible over its prime field.
    explicit ExtField(const Poly& f);

    const Poly& modulus() const { return f_; }
    const PrimeField& base() const { return f_.field(); }
    unsigned degree() const { return static_cast<unsigned>(f_.deg()); }

    /// p^d, the field size.
    std::uint64_t size() const { return size_; }

    Poly zero() const { return Poly(base()); }
    Poly one() const { return Poly::constant(base(), 1); }

    /// Class of t, a root of the modulus.
    Poly gen() const;

    /// Canonical image of a base-field residue.
    Poly embed(std::uint64_t c) const { return Poly::constant(base(), c); }

    Poly reduce(const Poly& a) const;
    Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
    Poly sub(const Poly& a, const Poly& b) const { return reduce(a - b); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

    /// Inverse by extended Euclid; throws ZeroElement on 0.
    Poly inv(const Poly& a) const;

    /// a^e for signed e (negative exponents go through the inverse).
    Poly pow(const Poly& a, std::int64_t e) const;

    /// a^p, the Frobenius map.
    Poly frobenius(const Poly& a) const;

    /// Multiplicative order of a nonzero element; divides p^d - 1.
    std::uint64_t mult_order(const Poly& a) const;

    /// a, a^p, a^(p^2), ... up to the first repeat.
    std::vector<Poly> frobenius_orbit(const Poly& a) const;

private:
    Poly f_;
    std::uint64_t size_;
};

} // namespace knotperiod
