// Benchmark for the GF(p) rank kernel: serial reference vs OpenMP elimination.
// Ranks must agree exactly; the table reports wall time and speedup.

#include "knotperiod/linalg.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using knotperiod::MatModP;
using knotperiod::PrimeField;

namespace {

MatModP random_matrix(PrimeField F, std::size_t n, std::mt19937_64& rng) {
    MatModP m(F, n, n);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p() - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = dist(rng);
    return m;
}

double time_ms(const MatModP& m, std::size_t (*fn)(MatModP), std::size_t& rank_out) {
    auto t0 = std::chrono::steady_clock::now();
    rank_out = fn(m);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t p = 9973;
    if (argc > 1)
        p = std::strtoull(argv[1], nullptr, 10);
    PrimeField F(p);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP: not enabled, parallel path falls back to serial\n";
#endif
    std::cout << "p = " << p << "\n\n";
    std::cout << "   n   serial(ms)  parallel(ms)  speedup\n";

    std::mt19937_64 rng(42);
    for (std::size_t n : {128, 256, 512, 768}) {
        MatModP m = random_matrix(F, n, rng);
        std::size_t rs = 0, rp = 0;
        double ts = time_ms(m, knotperiod::rank_serial, rs);
        double tp = time_ms(m, knotperiod::rank_parallel, rp);
        if (rs != rp) {
            std::cerr << "rank mismatch at n=" << n << ": serial " << rs << ", parallel "
                      << rp << "\n";
            return 1;
        }
        std::printf("%4zu  %10.2f  %12.2f  %7.2fx   (rank %zu)\n", n, ts, tp, ts / tp, rs);
    }
    return 0;
}
