#include "ncg/thermo.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "ncg/error.hpp"

namespace ncg {

ThermoPoint thermo_point(const PartitionEvaluation& eval, long n_particles)
{
    if (!(eval.tau > 0.0)) {
        throw DomainError("reduced temperature must be positive");
    }
    const LogPartition single = n_particle_log_z(eval, 1);
    if (!std::isfinite(single.d_log_z) || !std::isfinite(single.d2_log_z)) {
        throw DomainError("non-finite partition-function derivatives at tau = " +
                          show(eval.tau));
    }
    if (n_particles < 1) {
        throw DomainError("particle count must be at least 1");
    }

    const double tau = eval.tau;
    const double ln_z = single.log_z;
    const double g1 = single.d_log_z;
    const double g2 = single.d2_log_z;
    const double n = static_cast<double>(n_particles);

    ThermoPoint point;
    point.tau = tau;
    point.f_bar = n * (-tau * ln_z);
    point.u_bar = n * (tau * tau * g1);
    point.s_bar = n * (ln_z + tau * g1);
    point.c_bar = n * (2.0 * tau * g1 + tau * tau * g2);
    point.n_particles = n_particles;
    point.scheme = eval.scheme;
    return point;
}

HighTemperatureLimit asymptotic_high_t(double tau, const NCParams& params)
{
    validate(params);
    if (!(tau > 0.0)) {
        throw DomainError("reduced temperature must be positive");
    }
    return {2.0 * tau, 2.0};
}

std::vector<ThermoPoint> thermo_sweep(std::span<const double> taus, const NCParams& params,
                                      Scheme scheme, long n_particles, const SumControl& control,
                                      Execution exec)
{
    if (taus.empty()) {
        throw DomainError("temperature grid is empty");
    }
    validate(params);

    std::vector<ThermoPoint> points(taus.size());
    std::vector<std::string> failures(taus.size());
    std::vector<char> failed(taus.size(), 0);

    for_each_index(taus.size(), exec, [&](std::size_t i) {
        try {
            // The per-point level sum runs serially; the grid is the parallel loop.
            const PartitionEvaluation eval =
                evaluate(scheme, taus[i], params, control, Execution::Serial);
            if (!eval.converged) {
                throw ConvergenceError("level sum hit n_cap", eval.tail_bound.value_or(0.0));
            }
            points[i] = thermo_point(eval, n_particles);
        } catch (const std::exception& e) {
            failed[i] = 1;
            failures[i] = e.what();
        }
    });

    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (failed[i]) {
            throw SweepPointError(i, failures[i]);
        }
    }
    return points;
}

std::size_t heat_capacity_peak(std::span<const ThermoPoint> points)
{
    if (points.empty()) {
        throw DomainError("no points to scan");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].c_bar > points[best].c_bar) {
            best = i;
        }
    }
    return best;
}

} // namespace ncg
