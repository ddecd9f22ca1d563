#pragma once

// Single-particle partition function of the positive deformed Landau levels,
// Z(tau) = sum_n exp(-sqrt(A n) / tau), under three evaluation schemes.

#include <cstddef>
#include <optional>
#include <string_view>

#include "ncg/core_model.hpp"
#include "ncg/parallel.hpp"

namespace ncg {

enum class Scheme { DirectSum, HurwitzZeta, EulerMaclaurin };

/// "direct", "hurwitz", "em".
std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

struct SumControl {
    double rel_tol = 1e-12;
    std::size_t n_cap = 10'000'000;
};

/// rel_tol in (0, 1e-6], n_cap >= 1000.
void validate(const SumControl& control);

struct PartitionEvaluation {
    Scheme scheme = Scheme::HurwitzZeta;
    double tau = 0.0;
    double z_value = 0.0;
    double dz_dtau = 0.0;
    double d2z_dtau2 = 0.0;
    std::size_t terms_used = 0;         // DirectSum only
    std::optional<double> tail_bound;   // DirectSum only
    bool converged = true;
    bool clamped = false;               // exponential flushed to zero
};

/// Below this tau the Euler-Maclaurin form returns its exact limit Z = 1.
inline constexpr double em_tau_floor = 1e-3;
/// Boltzmann exponents sqrt(A)/tau beyond this are flushed to zero.
inline constexpr double underflow_exponent = 700.0;

/// Brute-force level sum with termwise derivatives. Stops once the integral
/// tail bound drops below control.rel_tol * Z; reaching control.n_cap returns
/// the partial sums with converged = false.
PartitionEvaluation z_direct(double tau, const NCParams& params, const SumControl& control = {},
                             Execution exec = Execution::Auto);

/// Z = 1/2 + tau^2 / A, from the residue expansion with zeta_H(0) = 1/2.
PartitionEvaluation z_hurwitz(double tau, const NCParams& params);

/// Euler-Maclaurin expansion truncated after the B_4 correction:
/// Z = 1 + e^{-s/tau} [1/2 + 2 tau^2/A + 2 tau/s - 79 s/(1920 tau)
///                     + A/(1920 tau^2) + A s/(5760 tau^3)],  s = sqrt(A).
PartitionEvaluation z_euler_maclaurin(double tau, const NCParams& params);

PartitionEvaluation evaluate(Scheme scheme, double tau, const NCParams& params,
                             const SumControl& control = {}, Execution exec = Execution::Auto);

/// Integral of exp(-sqrt(A x + A) / tau) over [0, inf):
/// 2 tau^2 / A (1 + sqrt(A)/tau) exp(-sqrt(A)/tau).
double convergence_integral(double tau, const NCParams& params);

/// (Z_EM - Z_H) / Z_EM. Positive whenever Euler-Maclaurin exceeds Hurwitz.
double relative_error(double tau, const NCParams& params);

/// ln of Z^N and its tau-derivatives.
struct LogPartition {
    double log_z;     // N ln Z
    double d_log_z;   // N Z'/Z
    double d2_log_z;  // N (Z''/Z - (Z'/Z)^2)
    long n_particles;
};

LogPartition n_particle_log_z(const PartitionEvaluation& eval, long n_particles);

} // namespace ncg
