#include "knotperiod/linalg.hpp"

#include "knotperiod/errors.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotperiod {

MatModP MatModP::identity(PrimeField F, std::size_t n) {
    MatModP m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

namespace {

// Eliminates column by column; only the rows below the pivot are touched,
// which is all rank needs. Mutates its copy in place.
template <bool Parallel>
std::size_t rank_impl(MatModP& m) {
    const PrimeField F = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m.at(r, j), m.at(piv, j));
        const std::uint64_t inv = F.inv(m.at(r, c));
        const std::uint64_t* prow = m.row(r);
        auto elim_row = [&](std::size_t i) {
            std::uint64_t* ri = m.row(i);
            if (ri[c] == 0)
                return;
            const std::uint64_t f = F.mul(ri[c], inv);
            for (std::size_t j = c; j < cols; ++j)
                ri[j] = F.sub(ri[j], F.mul(f, prow[j]));
        };
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::size_t i = r + 1; i < rows; ++i)
                elim_row(i);
        } else {
            for (std::size_t i = r + 1; i < rows; ++i)
                elim_row(i);
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank_serial(MatModP m) {
    return rank_impl<false>(m);
}

std::size_t rank_parallel(MatModP m) {
    return rank_impl<true>(m);
}

std::size_t rank(const MatModP& m) {
#ifdef _OPENMP
    const bool big = m.rows() * m.cols() >= 256 * 256;
    if (big && !omp_in_parallel())
        return rank_parallel(m);
#endif
    return rank_serial(m);
}

std::size_t nullspace_dim(const MatModP& m) {
    return m.cols() - rank(m);
}

std::vector<std::vector<std::uint64_t>> nullspace_basis(const MatModP& m_in) {
    MatModP m = m_in;
    const PrimeField F = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    // full reduced row echelon form
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(r, j), m.at(piv, j));
        const std::uint64_t inv = F.inv(m.at(r, c));
        for (std::size_t j = 0; j < cols; ++j)
            m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            const std::uint64_t f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free_c] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = F.neg(m.at(k, free_c));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatModP mat_add(const MatModP& a, const MatModP& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("mat_add: shape mismatch");
    MatModP out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return out;
}

MatModP mat_sub(const MatModP& a, const MatModP& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("mat_sub: shape mismatch");
    MatModP out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
    return out;
}

MatModP mat_mul(const MatModP& a, const MatModP& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("mat_mul: shape mismatch");
    const PrimeField F = a.field();
    MatModP out(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return out;
}

MatModP mat_pow(const MatModP& a, std::uint64_t e) {
    if (a.rows() != a.cols())
        throw InternalError("mat_pow: square matrix required");
    MatModP acc = MatModP::identity(a.field(), a.rows());
    MatModP base = a;
    while (e) {
        if (e & 1)
            acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_invertible(const MatModP& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

} // namespace knotperiod
