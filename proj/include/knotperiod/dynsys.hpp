#pragma once

/**
 * @file dynsys.hpp
 * @brief Brute-force side: orbit counting for the linear recurrence
 *        A^0 Y_j + A^1 Y_(j+1) + ... + A^M Y_(j+M) = 0 over GF(p).
 *
 * A point of period N is a cyclic solution (Y_0, ..., Y_(N-1)), i.e. a
 * nullspace vector of the block-circulant nN x nN system; counts of least
 * period N then fall out by Moebius inversion over the divisor lattice.
 * None of this consults the Jordan spectrum, which is the point: it is the
 * independent check of the formula side. iterate_census recounts a third
 * way, as fixed points of powers of the companion matrix. The per-divisor
 * rank computations are independent and run under OpenMP when available.
 */

#include "knotperiod/polymatrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace knotperiod {

/// Coefficient-matrix view of a polynomial matrix, validated nonsingular
/// as a matrix over GF(p)[t] (SingularMatrix otherwise).
class RecurrenceSystem {
public:
    explicit RecurrenceSystem(const PolyMatrix& m);

    const PrimeField& field() const { return F_; }
    std::size_t n() const { return n_; }
    unsigned top_degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const MatModP& A(unsigned j) const { return coeffs_[j]; }

private:
    PrimeField F_;
    std::size_t n_;
    std::vector<MatModP> coeffs_;
};

/// Dimension of the space of N-cyclic solutions.
unsigned cyclic_nullspace_dim(const RecurrenceSystem& sys, std::uint64_t N);

struct OrbitCensus {
    std::map<std::uint64_t, unsigned> dims;           ///< divisor -> cyclic solution dimension
    std::map<std::uint64_t, std::uint64_t> exact_counts;  ///< least period -> point count (nonzero only)
    std::map<std::uint64_t, std::uint64_t> orbit_counts;  ///< least period -> orbit count
    std::vector<std::uint64_t> period_set;            ///< sorted least periods that occur
};

/// Full census over all divisors of N_max (normally the shift order).
/// Point counts of least period N come from Moebius inversion of the
/// cyclic dimensions; consistency (nonnegative, divisible by N, summing
/// to p^dims[N_max]) is enforced, violations throw InconsistentCensus.
OrbitCensus orbit_census(const RecurrenceSystem& sys, std::uint64_t N_max);

/// Companion matrix of c = c_0 + c_1 t + ... + c_m t^m, c_0 != 0
/// (ZeroConstantTerm). Characteristic polynomial c/c_m; 0x0 for constants.
MatModP companion_matrix(const Poly& c);

/// Same census computed from fixed points of T^N (T must be invertible,
/// SingularT otherwise). For a 1x1 system and T the companion matrix of
/// its polynomial, this must agree with orbit_census.
OrbitCensus iterate_census(const MatModP& T, std::uint64_t N_max);

struct WitnessSequence {
    std::vector<std::uint64_t> values;  ///< one period worth of GF(p) residues
    std::uint64_t declared_period;
};

/// Scalar sequence y_j = C(j, s) * sum of lambda^(j-s) over the Frobenius
/// orbit of a root lambda of f. It solves the recurrence of f^(s+1), lands
/// in GF(p), and has minimal period lcm(d, p^r) with d the root order and
/// r minimal with s+1 <= p^r; the minimal period is verified by divisor
/// scan rather than trusted. multiplicity is the multiplicity of f in the
/// driving polynomial; s must stay below it (OrderOutOfRange).
WitnessSequence witness_sequence(const Poly& f, unsigned s, unsigned multiplicity);

struct Orbit {
    std::uint64_t period;
    std::vector<std::uint64_t> window;  ///< canonical representative, n*N values
};

/// Debug enumeration: lists every orbit of the N-cyclic solution space by
/// canonical representative. Returns nothing when the state count p^dim
/// exceeds the cap (default 10^6).
std::optional<std::vector<Orbit>> enumerate_orbits(const RecurrenceSystem& sys,
                                                   std::uint64_t N,
                                                   std::uint64_t cap = 1000000);

} // namespace knotperiod
