#pragma once

// Straightforward serial implementations kept as test oracles for the
// parallel kernels and as the baseline in bench/.

#include <span>
#include <vector>

#include "ncg/kernels.hpp"
#include "ncg/partition.hpp"
#include "ncg/thermo.hpp"

namespace ncg::reference {

/// Term-by-term sum with the tail test applied after every term.
LevelSums level_sum_serial(double tau, double a, double rel_tol, std::size_t n_cap);

/// Plain loop over the grid, no threading.
std::vector<ThermoPoint> thermo_sweep_serial(std::span<const double> taus, const NCParams& params,
                                             Scheme scheme, long n_particles,
                                             const SumControl& control = {});

} // namespace ncg::reference
