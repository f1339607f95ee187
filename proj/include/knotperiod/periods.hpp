#pragma once

/**
 * @file periods.hpp
 * @brief Orbit periods of the shift from the Jordan spectrum.
 *
 * A Jordan cell of size k on an orbit whose roots have multiplicative order
 * d returns to the identity after lcm(d, p^r) steps, where r is minimal
 * with k <= p^r: the diagonal needs d steps and the unipotent part dies at
 * p^r. The order of the whole shift is the lcm of those cell orders. The
 * candidate period set takes, per orbit j, the menu
 *     Q_j = {1} union {lcm(d_j, p^i) : 0 <= i <= r_j}
 * and closes it under lcm across orbits. For a 1x1 matrix (companion case,
 * every two-bridge knot) this set is exactly the set of orbit periods; in
 * general the true periods form a subset.
 */

#include "knotperiod/pencil.hpp"

#include <cstdint>
#include <vector>

namespace knotperiod {

/// Minimal r >= 0 with k <= p^r.
unsigned r_exponent(std::uint64_t k, std::uint64_t p);

/// lcm(d, p^r_exponent(k, p)): steps for a size-k cell with root order d.
std::uint64_t cell_order(std::uint64_t d, std::uint64_t k, std::uint64_t p);

/// Order of the shift: lcm of all cell orders; 1 for the empty spectrum.
std::uint64_t order_of_shift(const JordanSpectrum& spec);

struct PeriodSet {
    std::vector<std::uint64_t> periods;  ///< sorted, always starts with 1
    bool exact;                          ///< true when the set is provably the full answer
    std::uint64_t order_of_J;
};

/// All lcm combinations of the per-orbit menus. two_bridge marks the 1x1
/// route; it requires one cell per orbit (NotCompanionShape otherwise) and
/// turns on the exact flag.
PeriodSet candidate_period_set(const JordanSpectrum& spec, bool two_bridge);

} // namespace knotperiod
