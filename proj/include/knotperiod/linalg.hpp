#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices over GF(p): rank, nullspace, products, powers.
 *
 * rank_serial is the straightforward reference elimination and stays around
 * as the baseline the tests compare against; rank_parallel runs the same
 * elimination with the row updates split across OpenMP threads. rank()
 * dispatches: parallel for matrices past a size threshold when OpenMP is
 * compiled in and we are not already inside a parallel region, serial
 * otherwise. Both return identical results; bench_rank times them against
 * each other.
 */

#include "knotperiod/field.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace knotperiod {

class MatModP {
public:
    MatModP(PrimeField F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatModP identity(PrimeField F, std::size_t n);

    const PrimeField& field() const { return F_; }
    std::uint64_t p() const { return F_.p(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::uint64_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint64_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    bool operator==(const MatModP&) const = default;

private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

/// Reference implementation, plain row elimination.
std::size_t rank_serial(MatModP m);

/// Same elimination with OpenMP-parallel row updates.
std::size_t rank_parallel(MatModP m);

/// Dispatches between the two.
std::size_t rank(const MatModP& m);

std::size_t nullspace_dim(const MatModP& m);

/// Basis of the right nullspace, one vector per column of the result.
std::vector<std::vector<std::uint64_t>> nullspace_basis(const MatModP& m);

MatModP mat_add(const MatModP& a, const MatModP& b);
MatModP mat_sub(const MatModP& a, const MatModP& b);
MatModP mat_mul(const MatModP& a, const MatModP& b);
MatModP mat_pow(const MatModP& a, std::uint64_t e);

bool is_invertible(const MatModP& m);

} // namespace knotperiod
