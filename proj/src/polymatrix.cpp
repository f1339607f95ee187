#include "knotperiod/polymatrix.hpp"

namespace knotperiod {

int PolyMatrix::max_degree() const {
    int m = -1;
    for (const auto& e : e_)
        m = std::max(m, e.deg());
    return m;
}

MatModP PolyMatrix::coefficient_matrix(unsigned j) const {
    MatModP out(F_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            out.at(i, k) = at(i, k)[j];
    return out;
}

} // namespace knotperiod
