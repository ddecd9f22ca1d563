#pragma once

// Reduced thermodynamic functions of N independent deformed-graphene
// carriers, computed from a (Z, Z', Z'') triple of any scheme.

#include <cstddef>
#include <span>
#include <vector>

#include "ncg/partition.hpp"

namespace ncg {

/// F/kappa, U/kappa, S/k_B and C/k_B at one reduced temperature.
struct ThermoPoint {
    double tau = 0.0;
    double f_bar = 0.0;
    double u_bar = 0.0;
    double s_bar = 0.0;
    double c_bar = 0.0;
    long n_particles = 1;
    Scheme scheme = Scheme::HurwitzZeta;
};

/// F = -tau ln Z, U = tau^2 (ln Z)', S = ln Z + tau (ln Z)',
/// C = 2 tau (ln Z)' + tau^2 (ln Z)''; each evaluated per particle and then
/// multiplied by n_particles.
ThermoPoint thermo_point(const PartitionEvaluation& eval, long n_particles = 1);

struct HighTemperatureLimit {
    double u_bar;
    double c_bar;
};

/// (2 tau, 2) per particle, independent of the deformation.
HighTemperatureLimit asymptotic_high_t(double tau, const NCParams& params = {});

/// One ThermoPoint per grid value, in grid order. A failing point is rethrown
/// as SweepPointError carrying its index.
std::vector<ThermoPoint> thermo_sweep(std::span<const double> taus, const NCParams& params,
                                      Scheme scheme, long n_particles,
                                      const SumControl& control = {},
                                      Execution exec = Execution::Auto);

/// Index of the largest c_bar on the supplied grid (first one on ties).
std::size_t heat_capacity_peak(std::span<const ThermoPoint> points);

} // namespace ncg
