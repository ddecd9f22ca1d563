#pragma once

// Data-parallel summation kernels. Serial counterparts used for testing and
// benchmarking live in ncg/reference.hpp.

#include <cstddef>

#include "ncg/parallel.hpp"

namespace ncg {

/// Sums of the level Boltzmann factors f_n = exp(-sqrt(a n) / tau) and their
/// tau-derivatives over n = 0..terms-1.
struct LevelSums {
    double z = 0.0;
    double dz = 0.0;
    double d2z = 0.0;
    std::size_t terms = 0;
    double tail_bound = 0.0;  // upper bound on the omitted remainder of z
    bool converged = false;
};

/// Integral-test bound on sum_{n >= terms} f_n, i.e. the integral of f from
/// terms - 1 to infinity. Requires terms >= 1.
double level_tail_bound(double tau, double a, std::size_t terms);

/// Number of terms per chunk of the chunked sum. Convergence is tested only at
/// chunk boundaries, so terms is always a multiple of this (or n_cap).
inline constexpr std::size_t level_sum_chunk = 4096;

/// Chunked level sum. Chunks are evaluated concurrently and folded in index
/// order with compensated addition, so the result is bit-identical for any
/// thread count. Stops at the first chunk boundary where
/// level_tail_bound < rel_tol * z, or at n_cap.
LevelSums level_sum(double tau, double a, double rel_tol, std::size_t n_cap,
                    Execution exec = Execution::Auto);

} // namespace ncg
