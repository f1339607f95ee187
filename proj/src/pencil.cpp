#include "knotperiod/pencil.hpp"

#include "knotperiod/errors.hpp"
#include "knotperiod/intmath.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace knotperiod {

namespace {

// Minimal-degree nonzero entry in the trailing submatrix starting at (k, k),
// ties broken by row then column. Returns false if the submatrix is zero.
bool find_pivot(const PolyMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
    int best = -1;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            const Poly& e = m.at(i, j);
            if (e.is_zero())
                continue;
            if (best < 0 || e.deg() < best) {
                best = e.deg();
                pi = i;
                pj = j;
            }
        }
    return best >= 0;
}

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

} // namespace

InvariantPolynomials smith_normal_form(const PolyMatrix& m_in) {
    if (m_in.rows() != m_in.cols())
        throw InternalError("smith_normal_form: square matrix required");
    const std::size_t n = m_in.rows();
    PolyMatrix m = m_in;
    std::vector<Poly> diag;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(m, k, pi, pj))
            throw SingularMatrix("matrix over GF(p)[t] is singular");
        swap_rows(m, k, pi);
        swap_cols(m, k, pj);

        for (;;) {
            // clear column k below the pivot
            bool disturbed = false;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m.at(i, k).is_zero())
                    continue;
                auto [q, r] = poly_divmod(m.at(i, k), m.at(k, k));
                for (std::size_t j = k; j < n; ++j)
                    m.at(i, j) = m.at(i, j) - q * m.at(k, j);
                if (!r.is_zero())
                    disturbed = true;  // remainder has smaller degree than the pivot
            }
            // clear row k right of the pivot
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m.at(k, j).is_zero())
                    continue;
                auto [q, r] = poly_divmod(m.at(k, j), m.at(k, k));
                for (std::size_t i = k; i < n; ++i)
                    m.at(i, j) = m.at(i, j) - q * m.at(i, k);
                if (!r.is_zero())
                    disturbed = true;
            }
            if (disturbed) {
                std::size_t qi = k, qj = k;
                find_pivot(m, k, qi, qj);
                swap_rows(m, k, qi);
                swap_cols(m, k, qj);
                continue;
            }
            // pivot must divide the whole trailing submatrix
            bool fixed_up = false;
            for (std::size_t i = k + 1; i < n && !fixed_up; ++i)
                for (std::size_t j = k + 1; j < n && !fixed_up; ++j) {
                    if (m.at(i, j).is_zero())
                        continue;
                    if (!poly_divmod(m.at(i, j), m.at(k, k)).second.is_zero()) {
                        // fold the offending row into row k and restart
                        for (std::size_t c = k; c < n; ++c)
                            m.at(k, c) = m.at(k, c) + m.at(i, c);
                        fixed_up = true;
                    }
                }
            if (!fixed_up)
                break;
        }
        diag.push_back(m.at(k, k).monic());
    }

    InvariantPolynomials out;
    out.ilist.assign(diag.rbegin(), diag.rend());
    return out;
}

Poly poly_matrix_det(const PolyMatrix& m_in) {
    const PrimeField& F = m_in.field();
    if (m_in.rows() != m_in.cols())
        throw InternalError("poly_matrix_det: square matrix required");
    const std::size_t n = m_in.rows();
    if (n == 0)
        return Poly::constant(F, 1);
    PolyMatrix m = m_in;
    Poly prev = Poly::constant(F, 1);
    bool flip = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k).is_zero())
                ++s;
            if (s == n)
                return Poly(F);
            swap_rows(m, k, s);
            flip = !flip;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = poly_divexact(
                    m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return flip ? -det : det;
}

JordanSpectrum jordan_spectrum(const InvariantPolynomials& inv, PrimeField F,
                               std::uint64_t seed) {
    JordanSpectrum out{F, {}, 0, {}};
    const Poly t = Poly::t(F);
    std::map<Poly, std::vector<unsigned>> cells;
    std::mt19937_64 rng(seed);

    for (const Poly& ik : inv.ilist) {
        if (ik.is_zero())
            throw SingularMatrix("zero invariant polynomial");
        unsigned tm = ik.t_multiplicity();
        out.stripped_t.push_back(tm);
        Poly core = ik.shifted_down(tm);
        if (core.deg() < 1)
            continue;
        for (const auto& [f, mult] : factor(core, rng).parts) {
            if (f == t)
                throw InternalError("factor t survived stripping");
            cells[f].push_back(mult);
        }
    }

    for (auto& [f, sizes] : cells) {
        std::sort(sizes.rbegin(), sizes.rend());
        GaloisOrbitData orbit{f, root_order(f), {}, 0, 0};
        orbit.cell_sizes = sizes;
        orbit.k_max = sizes.front();
        unsigned r = 0;
        std::uint64_t pr = 1;
        while (pr < orbit.k_max) {
            pr = mul_checked_u64(pr, F.p());
            ++r;
        }
        orbit.r = r;
        for (unsigned k : sizes)
            out.total_dim += k * static_cast<unsigned>(f.deg());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

} // namespace knotperiod
