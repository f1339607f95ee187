#pragma once

/**
 * @file polymatrix.hpp
 * @brief Matrix with entries in GF(p)[t], viewed either entrywise or as a
 *        matrix polynomial A^0 + A^1 t + ... + A^M t^M.
 *
 * The coefficient view feeds the linear recurrence machinery; the entry
 * view feeds Smith normal form.
 */

#include "knotperiod/linalg.hpp"
#include "knotperiod/poly.hpp"

#include <cstddef>
#include <vector>

namespace knotperiod {

class PolyMatrix {
public:
    PolyMatrix(PrimeField F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), e_(rows * cols, Poly(F)) {}

    const PrimeField& field() const { return F_; }
    std::uint64_t p() const { return F_.p(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    /// Largest entry degree M; -1 when every entry is zero.
    int max_degree() const;

    /// Coefficient matrix A^j of t^j.
    MatModP coefficient_matrix(unsigned j) const;

    bool is_zero() const { return max_degree() < 0; }

private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

} // namespace knotperiod
