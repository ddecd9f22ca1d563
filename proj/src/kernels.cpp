#include "ncg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ncg {

namespace {

// Neumaier-compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double value)
    {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            carry += (sum - t) + value;
        } else {
            carry += (value - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + carry; }
};

struct ChunkSums {
    double f = 0.0;    // sum f_n
    double xf = 0.0;   // sum x_n f_n
    double x2f = 0.0;  // sum x_n (x_n - 2) f_n
};

ChunkSums sum_chunk(double tau, double a, std::size_t begin, std::size_t end)
{
    ChunkSums s;
    const double inv_tau = 1.0 / tau;
    for (std::size_t n = begin; n < end; ++n) {
        const double x = std::sqrt(a * static_cast<double>(n)) * inv_tau;
        const double f = std::exp(-x);
        s.f += f;
        s.xf += x * f;
        s.x2f += x * (x - 2.0) * f;
    }
    return s;
}

} // namespace

double level_tail_bound(double tau, double a, std::size_t terms)
{
    const double y = std::sqrt(a * static_cast<double>(terms - 1)) / tau;
    return 2.0 * tau * tau / a * (1.0 + y) * std::exp(-y);
}

LevelSums level_sum(double tau, double a, double rel_tol, std::size_t n_cap, Execution exec)
{
    constexpr std::size_t max_batch = 256;
    const bool parallel = use_parallel(exec);

    Accumulator f, xf, x2f;
    LevelSums out;
    std::vector<ChunkSums> parts;
    std::size_t start = 0;
    std::size_t batch = 1;

    while (start < n_cap) {
        const std::size_t remaining_chunks = (n_cap - start + level_sum_chunk - 1) / level_sum_chunk;
        const std::size_t count = std::min(batch, remaining_chunks);
        parts.assign(count, ChunkSums{});
        for_each_index(count, parallel ? Execution::Parallel : Execution::Serial, [&](std::size_t k) {
            const std::size_t begin = start + k * level_sum_chunk;
            const std::size_t end = std::min(begin + level_sum_chunk, n_cap);
            parts[k] = sum_chunk(tau, a, begin, end);
        });

        for (std::size_t k = 0; k < count; ++k) {
            f.add(parts[k].f);
            xf.add(parts[k].xf);
            x2f.add(parts[k].x2f);
            out.terms = std::min(start + (k + 1) * level_sum_chunk, n_cap);
            out.tail_bound = level_tail_bound(tau, a, out.terms);
            if (out.tail_bound < rel_tol * f.value()) {
                out.converged = true;
                break;
            }
        }
        if (out.converged) {
            break;
        }
        start += count * level_sum_chunk;
        batch = std::min(2 * batch, max_batch);
    }

    out.z = f.value();
    out.dz = xf.value() / tau;
    out.d2z = x2f.value() / (tau * tau);
    return out;
}

} // namespace ncg
