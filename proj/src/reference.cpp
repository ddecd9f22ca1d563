#include "ncg/reference.hpp"

#include <cmath>

#include "ncg/error.hpp"

namespace ncg::reference {

LevelSums level_sum_serial(double tau, double a, double rel_tol, std::size_t n_cap)
{
    long double z = 0.0L;
    long double dz = 0.0L;
    long double d2z = 0.0L;
    LevelSums out;
    for (std::size_t n = 0; n < n_cap; ++n) {
        const long double x = std::sqrt(static_cast<long double>(a) * n) / tau;
        const long double f = std::exp(-x);
        z += f;
        dz += x * f / tau;
        d2z += x * (x - 2.0L) * f / (static_cast<long double>(tau) * tau);
        out.terms = n + 1;
        out.tail_bound = level_tail_bound(tau, a, out.terms);
        if (out.tail_bound < rel_tol * static_cast<double>(z)) {
            out.converged = true;
            break;
        }
    }
    out.z = static_cast<double>(z);
    out.dz = static_cast<double>(dz);
    out.d2z = static_cast<double>(d2z);
    return out;
}

std::vector<ThermoPoint> thermo_sweep_serial(std::span<const double> taus, const NCParams& params,
                                             Scheme scheme, long n_particles,
                                             const SumControl& control)
{
    std::vector<ThermoPoint> points;
    points.reserve(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
        PartitionEvaluation eval;
        if (scheme == Scheme::DirectSum) {
            validate(control);
            const LevelSums sums =
                level_sum_serial(taus[i], deformation_a(params), control.rel_tol, control.n_cap);
            eval.scheme = Scheme::DirectSum;
            eval.tau = taus[i];
            eval.z_value = sums.z;
            eval.dz_dtau = sums.dz;
            eval.d2z_dtau2 = sums.d2z;
            eval.converged = sums.converged;
        } else {
            eval = evaluate(scheme, taus[i], params, control, Execution::Serial);
        }
        points.push_back(thermo_point(eval, n_particles));
    }
    return points;
}

} // namespace ncg::reference
