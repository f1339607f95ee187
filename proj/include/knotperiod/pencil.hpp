#pragma once

/**
 * @file pencil.hpp
 * @brief Smith normal form over GF(p)[t] and the Jordan spectrum it encodes.
 *
 * GF(p)[t] is a Euclidean domain, so a nonsingular polynomial matrix has a
 * diagonal form d_1 | d_2 | ... | d_n under row and column operations. The
 * invariant polynomials are kept largest first (i_1 = d_n), matching how the
 * elementary divisors of a matrix pencil are usually listed. For the module
 * GF(p)[t]^n / A(t) GF(p)[t]^n with the shift acting as multiplication by t,
 * each irreducible factor f != t of multiplicity k inside one invariant
 * polynomial contributes a Jordan cell of size k on the Galois orbit of the
 * roots of f. jordan_spectrum collects those cells per orbit, together with
 * the multiplicative order d of the roots and the ceiling exponent r with
 * p^(r-1) < k_max <= p^r; periods.hpp turns that data into orbit periods.
 * Factors of t are stripped from each invariant polynomial first and the
 * stripped exponents are reported.
 */

#include "knotperiod/polymatrix.hpp"

#include <cstdint>
#include <vector>

namespace knotperiod {

struct InvariantPolynomials {
    /// Monic, largest first: ilist[0] is divisible by every other entry.
    std::vector<Poly> ilist;
};

/// Smith normal form of a square nonsingular matrix over GF(p)[t].
/// Pivots are chosen by minimal degree (ties by row, then column).
/// Throws SingularMatrix when the determinant vanishes.
InvariantPolynomials smith_normal_form(const PolyMatrix& m);

/// Determinant by fraction-free elimination, the independent route the
/// tests compare against the product of the invariant polynomials.
Poly poly_matrix_det(const PolyMatrix& m);

struct GaloisOrbitData {
    Poly factor;                      ///< monic irreducible, never t
    std::uint64_t order_d;            ///< multiplicative order of its roots
    std::vector<unsigned> cell_sizes; ///< one per invariant polynomial containing the factor, descending
    unsigned k_max;                   ///< largest cell
    unsigned r;                       ///< minimal r with k_max <= p^r
};

struct JordanSpectrum {
    PrimeField F;
    std::vector<GaloisOrbitData> orbits;
    unsigned total_dim;                    ///< sum of cell size * factor degree
    std::vector<unsigned> stripped_t;      ///< t-multiplicity removed from each invariant polynomial
};

/// Factors every invariant polynomial and groups Jordan cells by Galois
/// orbit. Orbits are sorted by their factor (degree, then coefficients).
/// The seed feeds the equal-degree factorization; the output does not
/// depend on it (factor lists are canonically sorted), but it is kept
/// explicit so runs are reproducible bit for bit.
JordanSpectrum jordan_spectrum(const InvariantPolynomials& inv, PrimeField F,
                               std::uint64_t seed = kDefaultFactorSeed);

} // namespace knotperiod
