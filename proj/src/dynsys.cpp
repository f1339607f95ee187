#include "knotperiod/dynsys.hpp"

#include "knotperiod/errors.hpp"
#include "knotperiod/extfield.hpp"
#include "knotperiod/intmath.hpp"
#include "knotperiod/pencil.hpp"
#include "knotperiod/periods.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace knotperiod {

RecurrenceSystem::RecurrenceSystem(const PolyMatrix& m) : F_(m.field()), n_(m.rows()) {
    if (m.rows() != m.cols())
        throw InternalError("recurrence system needs a square matrix");
    if (n_ > 0 && poly_matrix_det(m).is_zero())
        throw SingularMatrix("matrix polynomial has zero determinant");
    int M = std::max(m.max_degree(), 0);
    for (int j = 0; j <= M; ++j)
        coeffs_.push_back(m.coefficient_matrix(static_cast<unsigned>(j)));
}

unsigned cyclic_nullspace_dim(const RecurrenceSystem& sys, std::uint64_t N) {
    if (N == 0)
        throw Error("period 0 requested");
    const std::size_t n = sys.n();
    if (n == 0)
        return 0;
    const PrimeField& F = sys.field();
    const std::size_t size = static_cast<std::size_t>(N) * n;
    MatModP big(F, size, size);
    for (std::uint64_t i = 0; i < N; ++i)
        for (unsigned j = 0; j <= sys.top_degree(); ++j) {
            const MatModP& A = sys.A(j);
            const std::uint64_t cblock = (i + j) % N;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    auto& cell = big.at(i * n + r, cblock * n + c);
                    cell = F.add(cell, A.at(r, c));
                }
        }
    return static_cast<unsigned>(nullspace_dim(big));
}

namespace {

OrbitCensus census_from_dims(const PrimeField& F, std::map<std::uint64_t, unsigned> dims,
                             std::uint64_t N_max) {
    OrbitCensus out;
    out.dims = std::move(dims);
    __int128 total = 0;
    for (const auto& [N, dim] : out.dims) {
        (void)dim;
        __int128 count = 0;
        for (const auto& [d, dim_d] : out.dims) {
            if (N % d != 0)
                continue;
            const int mu = mobius_u64(N / d);
            if (mu == 0)
                continue;
            const __int128 states = static_cast<__int128>(pow_checked_u64(F.p(), dim_d));
            count += mu > 0 ? states : -states;
        }
        if (count < 0)
            throw InconsistentCensus("negative point count at period " + std::to_string(N));
        if (count % static_cast<__int128>(N) != 0)
            throw InconsistentCensus("point count at period " + std::to_string(N) +
                                     " is not divisible by the period");
        total += count;
        if (count > 0) {
            const std::uint64_t c = static_cast<std::uint64_t>(count);
            out.exact_counts[N] = c;
            out.orbit_counts[N] = c / N;
            out.period_set.push_back(N);
        }
    }
    if (total != static_cast<__int128>(pow_checked_u64(F.p(), out.dims.at(N_max))))
        throw InconsistentCensus("census does not add up to the full state count");
    std::sort(out.period_set.begin(), out.period_set.end());
    return out;
}

} // namespace

OrbitCensus orbit_census(const RecurrenceSystem& sys, std::uint64_t N_max) {
    const auto divs = divisors_u64(N_max);
    std::vector<unsigned> dim_of(divs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < divs.size(); ++i)
        dim_of[i] = cyclic_nullspace_dim(sys, divs[i]);
    std::map<std::uint64_t, unsigned> dims;
    for (std::size_t i = 0; i < divs.size(); ++i)
        dims[divs[i]] = dim_of[i];
    return census_from_dims(sys.field(), std::move(dims), N_max);
}

MatModP companion_matrix(const Poly& c) {
    if (c.is_zero())
        throw ZeroConstantTerm("companion matrix of the zero polynomial");
    const PrimeField& F = c.field();
    if (c[0] == 0)
        throw ZeroConstantTerm("companion matrix needs a nonzero constant term");
    const int m = c.deg();
    MatModP T(F, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    if (m == 0)
        return T;
    const std::uint64_t lead_inv = F.inv(c.lead());
    for (int i = 0; i + 1 < m; ++i)
        T.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = 1;
    for (int j = 0; j < m; ++j)
        T.at(static_cast<std::size_t>(m) - 1, static_cast<std::size_t>(j)) =
            F.neg(F.mul(c[static_cast<std::size_t>(j)], lead_inv));
    return T;
}

OrbitCensus iterate_census(const MatModP& T, std::uint64_t N_max) {
    if (T.rows() != T.cols())
        throw InternalError("iterate_census: square matrix required");
    if (T.rows() > 0 && !is_invertible(T))
        throw SingularT("iteration matrix is singular");
    const PrimeField& F = T.field();
    const auto divs = divisors_u64(N_max);
    std::vector<unsigned> dim_of(divs.size(), 0);
    const MatModP E = MatModP::identity(F, T.rows());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < divs.size(); ++i)
        dim_of[i] = static_cast<unsigned>(nullspace_dim(mat_sub(mat_pow(T, divs[i]), E)));
    std::map<std::uint64_t, unsigned> dims;
    for (std::size_t i = 0; i < divs.size(); ++i)
        dims[divs[i]] = dim_of[i];
    return census_from_dims(F, std::move(dims), N_max);
}

WitnessSequence witness_sequence(const Poly& f, unsigned s, unsigned multiplicity) {
    if (s >= multiplicity)
        throw OrderOutOfRange("derivative order " + std::to_string(s) +
                              " needs multiplicity > " + std::to_string(s) +
                              ", got " + std::to_string(multiplicity));
    const PrimeField& F = f.field();
    const std::uint64_t d = root_order(f);  // validates monic irreducible != t
    const std::uint64_t pr = pow_checked_u64(F.p(), r_exponent(s + 1, F.p()));
    const std::uint64_t L = lcm_u64(d, pr);

    ExtField E(f);
    const Poly lambda = E.gen();
    const auto orbit = E.frobenius_orbit(lambda);

    auto value_at = [&](std::uint64_t j) {
        // lambda^(j-s) with the exponent folded mod d
        const std::int64_t shift = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(s);
        const std::int64_t e = ((shift % static_cast<std::int64_t>(d)) + static_cast<std::int64_t>(d)) %
                               static_cast<std::int64_t>(d);
        Poly sum = E.zero();
        for (const Poly& mu : orbit)
            sum = E.add(sum, E.pow(mu, e));
        if (sum.deg() > 0)
            throw InternalError("witness value left the prime field");
        const std::uint64_t binom = hasse_binomial(static_cast<std::int64_t>(j), s, F);
        return F.mul(binom, sum.is_zero() ? 0 : sum[0]);
    };

    WitnessSequence out;
    out.declared_period = L;
    out.values.resize(L);
    for (std::uint64_t j = 0; j < L; ++j)
        out.values[j] = value_at(j);

    // L really is a period of the two-sided sequence
    for (std::uint64_t j = 0; j < L; ++j)
        if (value_at(j + L) != out.values[j])
            throw InternalError("declared witness period is not a period");

    // minimal period by divisor scan, never trusted from the formula
    for (std::uint64_t P : divisors_u64(L)) {
        bool periodic = true;
        for (std::uint64_t j = 0; j < L && periodic; ++j)
            periodic = out.values[(j + P) % L] == out.values[j];
        if (periodic) {
            if (P != L)
                throw InternalError("witness minimal period " + std::to_string(P) +
                                    " undercuts declared " + std::to_string(L));
            break;
        }
    }

    // the sequence solves the recurrence of f^(s+1), cyclically over L
    Poly g = Poly::constant(F, 1);
    for (unsigned i = 0; i <= s; ++i)
        g = g * f;
    for (std::uint64_t j = 0; j < L; ++j) {
        std::uint64_t acc = 0;
        for (int i = 0; i <= g.deg(); ++i)
            acc = F.add(acc, F.mul(g[static_cast<std::size_t>(i)],
                                   out.values[(j + static_cast<std::uint64_t>(i)) % L]));
        if (acc != 0)
            throw InternalError("witness does not solve its recurrence");
    }
    return out;
}

std::optional<std::vector<Orbit>> enumerate_orbits(const RecurrenceSystem& sys,
                                                   std::uint64_t N,
                                                   std::uint64_t cap) {
    const PrimeField& F = sys.field();
    const std::size_t n = sys.n();
    const std::size_t len = static_cast<std::size_t>(N) * n;

    std::vector<std::vector<std::uint64_t>> basis;
    if (n > 0) {
        MatModP big(F, len, len);
        for (std::uint64_t i = 0; i < N; ++i)
            for (unsigned j = 0; j <= sys.top_degree(); ++j)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) {
                        auto& cell = big.at(i * n + r, ((i + j) % N) * n + c);
                        cell = F.add(cell, sys.A(j).at(r, c));
                    }
        basis = nullspace_basis(big);
    }

    std::uint64_t states = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        states = mul_checked_u64(states, F.p());
        if (states > cap)
            return std::nullopt;
    }

    const auto divs = divisors_u64(N);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Orbit> orbits;

    std::vector<std::uint64_t> coeff(basis.size(), 0);
    for (std::uint64_t count = 0; count < states; ++count) {
        std::vector<std::uint64_t> v(len, 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (coeff[b] == 0)
                continue;
            for (std::size_t i = 0; i < len; ++i)
                v[i] = F.add(v[i], F.mul(coeff[b], basis[b][i]));
        }
        // mixed-radix increment
        for (std::size_t b = 0; b < coeff.size(); ++b) {
            if (++coeff[b] < F.p())
                break;
            coeff[b] = 0;
        }

        // minimal period: smallest divisor whose block rotation fixes v
        std::uint64_t period = N;
        for (std::uint64_t P : divs) {
            bool ok = true;
            for (std::size_t i = 0; i < len && ok; ++i)
                ok = v[(i + static_cast<std::size_t>(P) * n) % len] == v[i];
            if (ok) {
                period = P;
                break;
            }
        }
        // canonical representative: lexicographically smallest block rotation
        std::vector<std::uint64_t> best = v;
        for (std::uint64_t k = 1; k < N; ++k) {
            std::vector<std::uint64_t> rot(len);
            for (std::size_t i = 0; i < len; ++i)
                rot[i] = v[(i + static_cast<std::size_t>(k) * n) % len];
            if (rot < best)
                best = rot;
        }
        if (seen.insert(best).second)
            orbits.push_back({period, std::move(best)});
    }

    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        return a.period != b.period ? a.period < b.period : a.window < b.window;
    });
    return orbits;
}

} // namespace knotperiod
