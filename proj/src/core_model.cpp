#include "ncg/core_model.hpp"

#include <cmath>
#include <string>

#include "ncg/error.hpp"

namespace ncg {

namespace {

void require_positive(double value, const char* name)
{
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError(std::string(name) + " must be finite and positive");
    }
}

} // namespace

void validate(const NCParams& params)
{
    if (!std::isfinite(params.theta_bar) || params.theta_bar < 0.0) {
        throw DomainError("theta_bar must be finite and non-negative, got " +
                          show(params.theta_bar));
    }
    if (!std::isfinite(params.eta_bar) || params.eta_bar < 0.0) {
        throw DomainError("eta_bar must be finite and non-negative, got " +
                          show(params.eta_bar));
    }
}

double deformation_a(const NCParams& params)
{
    validate(params);
    const double lambda = 1.0 + params.theta_bar;
    return lambda * (lambda + params.eta_bar);
}

PhysicalScales::PhysicalScales(double hbar, double k_B, double l_B, double v_F)
    : hbar_(hbar), k_B_(k_B), l_B_(l_B), v_F_(v_F), mode_(UnitMode::SI)
{
    require_positive(hbar, "hbar");
    require_positive(k_B, "k_B");
    require_positive(l_B, "l_B");
    require_positive(v_F, "v_F");
}

PhysicalScales PhysicalScales::si_for_field(double field_tesla, double v_F)
{
    return {si::hbar, si::k_B, magnetic_length(field_tesla), v_F};
}

double PhysicalScales::kappa() const noexcept
{
    return std::sqrt(2.0) * hbar_ * v_F_ / l_B_;
}

DeformationFactor deformation_factor(const NCParams& params)
{
    const double a = deformation_a(params);
    const double lambda = 1.0 + params.theta_bar;
    return {
        .a_value = a,
        .lambda_c = lambda,
        .omega_c = lambda + params.eta_bar,
        .q_coupling = std::sqrt(2.0 * a),
    };
}

double coupling_energy(const NCParams& params, const PhysicalScales& scales)
{
    return scales.kappa() * std::sqrt(deformation_a(params));
}

LandauLevel landau_level(std::int64_t n, Band band, const NCParams& params,
                         const PhysicalScales& scales)
{
    if (n < 0) {
        throw DomainError("Landau level index must be non-negative, got " + std::to_string(n));
    }
    const double sign = static_cast<double>(static_cast<int>(band));
    const double reduced = sign * std::sqrt(deformation_a(params) * static_cast<double>(n));
    return {n, band, scales.kappa() * reduced, reduced};
}

double magnetic_length(double field, double hbar, double e_charge)
{
    if (!std::isfinite(field) || field <= 0.0) {
        throw DomainError("magnetic field must be positive");
    }
    require_positive(hbar, "hbar");
    require_positive(e_charge, "e_charge");
    return std::sqrt(hbar / (e_charge * field));
}

} // namespace ncg
