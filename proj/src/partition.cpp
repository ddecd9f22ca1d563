#include "ncg/partition.hpp"

#include <cmath>
#include <string>

#include "ncg/error.hpp"
#include "ncg/kernels.hpp"

namespace ncg {

namespace {

void require_tau(double tau)
{
    if (!std::isfinite(tau) || tau <= 0.0) {
        throw DomainError("reduced temperature must be finite and positive, got " +
                          show(tau));
    }
}

PartitionEvaluation frozen_limit(Scheme scheme, double tau)
{
    PartitionEvaluation eval;
    eval.scheme = scheme;
    eval.tau = tau;
    eval.z_value = 1.0;
    eval.clamped = true;
    return eval;
}

} // namespace

std::string_view to_string(Scheme scheme)
{
    switch (scheme) {
    case Scheme::DirectSum:
        return "direct";
    case Scheme::HurwitzZeta:
        return "hurwitz";
    case Scheme::EulerMaclaurin:
        return "em";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    if (name == "direct") {
        return Scheme::DirectSum;
    }
    if (name == "hurwitz") {
        return Scheme::HurwitzZeta;
    }
    if (name == "em") {
        return Scheme::EulerMaclaurin;
    }
    return std::nullopt;
}

void validate(const SumControl& control)
{
    if (!(control.rel_tol > 0.0 && control.rel_tol <= 1e-6)) {
        throw DomainError("rel_tol must lie in (0, 1e-6], got " + show(control.rel_tol));
    }
    if (control.n_cap < 1000) {
        throw DomainError("n_cap must be at least 1000, got " + std::to_string(control.n_cap));
    }
}

PartitionEvaluation z_direct(double tau, const NCParams& params, const SumControl& control,
                             Execution exec)
{
    require_tau(tau);
    validate(control);
    const double a = deformation_a(params);

    if (std::sqrt(a) / tau > underflow_exponent) {
        PartitionEvaluation eval = frozen_limit(Scheme::DirectSum, tau);
        eval.terms_used = 1;
        eval.tail_bound = 0.0;
        return eval;
    }

    const LevelSums sums = level_sum(tau, a, control.rel_tol, control.n_cap, exec);
    PartitionEvaluation eval;
    eval.scheme = Scheme::DirectSum;
    eval.tau = tau;
    eval.z_value = sums.z;
    eval.dz_dtau = sums.dz;
    eval.d2z_dtau2 = sums.d2z;
    eval.terms_used = sums.terms;
    eval.tail_bound = sums.tail_bound;
    eval.converged = sums.converged;
    return eval;
}

PartitionEvaluation z_hurwitz(double tau, const NCParams& params)
{
    require_tau(tau);
    const double a = deformation_a(params);
    PartitionEvaluation eval;
    eval.scheme = Scheme::HurwitzZeta;
    eval.tau = tau;
    eval.z_value = 0.5 + tau * tau / a;
    eval.dz_dtau = 2.0 * tau / a;
    eval.d2z_dtau2 = 2.0 / a;
    return eval;
}

PartitionEvaluation z_euler_maclaurin(double tau, const NCParams& params)
{
    require_tau(tau);
    const double a = deformation_a(params);
    const double s = std::sqrt(a);
    if (tau < em_tau_floor || s / tau > underflow_exponent) {
        return frozen_limit(Scheme::EulerMaclaurin, tau);
    }

    const double t2 = tau * tau;
    const double t3 = t2 * tau;
    const double t4 = t3 * tau;
    const double t5 = t4 * tau;
    const double as = a * s;

    // Bracketed polynomial in tau and 1/tau, with its first two derivatives.
    const double p = 0.5 + 2.0 * t2 / a + 2.0 * tau / s - 79.0 * s / (1920.0 * tau) +
                     a / (1920.0 * t2) + as / (5760.0 * t3);
    const double dp = 4.0 * tau / a + 2.0 / s + 79.0 * s / (1920.0 * t2) - 2.0 * a / (1920.0 * t3) -
                      3.0 * as / (5760.0 * t4);
    const double d2p = 4.0 / a - 158.0 * s / (1920.0 * t3) + 6.0 * a / (1920.0 * t4) +
                       12.0 * as / (5760.0 * t5);

    // e = exp(-s/tau): e' = g e, e'' = (g^2 - 2 s/tau^3) e.
    const double e = std::exp(-s / tau);
    const double g = s / t2;

    PartitionEvaluation eval;
    eval.scheme = Scheme::EulerMaclaurin;
    eval.tau = tau;
    eval.z_value = 1.0 + e * p;
    eval.dz_dtau = e * (g * p + dp);
    eval.d2z_dtau2 = e * ((g * g - 2.0 * s / t3) * p + 2.0 * g * dp + d2p);
    return eval;
}

PartitionEvaluation evaluate(Scheme scheme, double tau, const NCParams& params,
                             const SumControl& control, Execution exec)
{
    switch (scheme) {
    case Scheme::DirectSum:
        return z_direct(tau, params, control, exec);
    case Scheme::HurwitzZeta:
        return z_hurwitz(tau, params);
    case Scheme::EulerMaclaurin:
        return z_euler_maclaurin(tau, params);
    }
    throw DomainError("unknown scheme");
}

double convergence_integral(double tau, const NCParams& params)
{
    require_tau(tau);
    const double a = deformation_a(params);
    const double x = std::sqrt(a) / tau;
    return 2.0 * tau * tau / a * (1.0 + x) * std::exp(-x);
}

double relative_error(double tau, const NCParams& params)
{
    const double z_em = z_euler_maclaurin(tau, params).z_value;
    const double z_h = z_hurwitz(tau, params).z_value;
    return (z_em - z_h) / z_em;
}

LogPartition n_particle_log_z(const PartitionEvaluation& eval, long n_particles)
{
    if (n_particles < 1) {
        throw DomainError("particle count must be at least 1, got " + std::to_string(n_particles));
    }
    if (!(eval.z_value > 0.0) || !std::isfinite(eval.z_value)) {
        throw DomainError("partition function must be positive, got " + std::to_string(eval.z_value));
    }
    const double n = static_cast<double>(n_particles);
    const double g1 = eval.dz_dtau / eval.z_value;
    const double g2 = eval.d2z_dtau2 / eval.z_value - g1 * g1;
    return {n * std::log(eval.z_value), n * g1, n * g2, n_particles};
}

} // namespace ncg
