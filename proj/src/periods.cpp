#include "knotperiod/periods.hpp"

#include "knotperiod/errors.hpp"
#include "knotperiod/intmath.hpp"

#include <algorithm>
#include <set>

namespace knotperiod {

unsigned r_exponent(std::uint64_t k, std::uint64_t p) {
    if (k == 0)
        throw Error("r_exponent of k = 0");
    unsigned r = 0;
    std::uint64_t pr = 1;
    while (pr < k) {
        pr = mul_checked_u64(pr, p);
        ++r;
    }
    return r;
}

std::uint64_t cell_order(std::uint64_t d, std::uint64_t k, std::uint64_t p) {
    return lcm_u64(d, pow_checked_u64(p, r_exponent(k, p)));
}

std::uint64_t order_of_shift(const JordanSpectrum& spec) {
    std::uint64_t order = 1;
    for (const auto& orbit : spec.orbits)
        for (unsigned k : orbit.cell_sizes)
            order = lcm_u64(order, cell_order(orbit.order_d, k, spec.F.p()));
    return order;
}

PeriodSet candidate_period_set(const JordanSpectrum& spec, bool two_bridge) {
    const std::uint64_t p = spec.F.p();
    if (two_bridge)
        for (const auto& orbit : spec.orbits)
            if (orbit.cell_sizes.size() != 1)
                throw NotCompanionShape("orbit of " + orbit.factor.str() +
                                        " has " + std::to_string(orbit.cell_sizes.size()) +
                                        " cells; the companion route needs one");

    // close the per-orbit menus under lcm across orbits; each menu is
    // already lcm-closed, so one choice per orbit is enough
    std::set<std::uint64_t> acc{1};
    for (const auto& orbit : spec.orbits) {
        std::vector<std::uint64_t> menu{1};
        std::uint64_t pi = 1;
        for (unsigned i = 0; i <= orbit.r; ++i) {
            menu.push_back(lcm_u64(orbit.order_d, pi));
            pi = mul_checked_u64(pi, p);
        }
        std::set<std::uint64_t> next;
        for (std::uint64_t a : acc)
            for (std::uint64_t q : menu)
                next.insert(lcm_u64(a, q));
        acc = std::move(next);
    }

    PeriodSet out;
    out.periods.assign(acc.begin(), acc.end());
    out.exact = two_bridge;
    out.order_of_J = order_of_shift(spec);

    // the largest combination must be the order of the shift itself
    std::uint64_t all = 1;
    for (std::uint64_t q : out.periods)
        all = lcm_u64(all, q);
    if (all != out.order_of_J)
        throw InternalError("candidate periods do not reach the shift order");
    for (std::uint64_t q : out.periods)
        if (out.order_of_J % q != 0)
            throw InternalError("candidate period does not divide the shift order");
    return out;
}

} // namespace knotperiod
