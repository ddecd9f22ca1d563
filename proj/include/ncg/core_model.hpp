#pragma once

// Model parameters, unit conventions and the deformed Landau spectrum of
// gauge-invariant graphene in noncommutative phase space.

#include <cstdint>

namespace ncg {

/// Dimensionless deformation pair.
///
/// theta_bar = Theta / (2 l_B^2) deforms the coordinate algebra and
/// eta_bar = eta l_B^2 / hbar^2 the momentum algebra. Any finite non-negative
/// value is accepted; the physically motivated window is [0, 0.1] and the
/// extended plots go up to 10.
struct NCParams {
    double theta_bar = 0.0;
    double eta_bar = 0.0;
};

/// Throws DomainError unless both components are finite and non-negative.
void validate(const NCParams& params);

/// A = (1 + theta_bar)(1 + theta_bar + eta_bar). Validates its input.
double deformation_a(const NCParams& params);

enum class UnitMode { Reduced, SI };

namespace si {
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double e_charge = 1.602176634e-19;  // C
inline constexpr double k_B = 1.380649e-23;          // J / K
inline constexpr double v_F_graphene = 1.0e6;        // m / s

// Characteristic temperature quoted for the model. The magnetic field it
// corresponds to is not given, so it is informational only; the scales below
// always derive T0 from their own hbar, v_F, l_B.
inline constexpr double quoted_T0 = 5.93e9;          // K
} // namespace si

/// Physical constants for one evaluation.
///
/// kappa = sqrt(2) hbar v_F / l_B and T0 = kappa / k_B are always recomputed
/// from the stored fields.
class PhysicalScales {
public:
    /// l_B = hbar = k_B = v_F = 1, so kappa = sqrt(2).
    PhysicalScales() = default;
    PhysicalScales(double hbar, double k_B, double l_B, double v_F);

    static PhysicalScales reduced() { return {}; }
    /// SI constants with l_B taken from the field strength (tesla).
    static PhysicalScales si_for_field(double field_tesla, double v_F = si::v_F_graphene);

    double hbar() const noexcept { return hbar_; }
    double k_B() const noexcept { return k_B_; }
    double l_B() const noexcept { return l_B_; }
    double v_F() const noexcept { return v_F_; }
    UnitMode mode() const noexcept { return mode_; }

    double kappa() const noexcept;
    double T0() const noexcept { return kappa() / k_B_; }

private:
    double hbar_ = 1.0;
    double k_B_ = 1.0;
    double l_B_ = 1.0;
    double v_F_ = 1.0;
    UnitMode mode_ = UnitMode::Reduced;
};

/// Coupling constants of the deformed Dirac Hamiltonian.
struct DeformationFactor {
    double a_value;     // A
    double lambda_c;    // lambda = 1 + theta_bar
    double omega_c;     // Omega in units of hbar / (2 l_B^2): lambda + eta_bar
    double q_coupling;  // Q in units of hbar / l_B: sqrt(2 A)
};

DeformationFactor deformation_factor(const NCParams& params);

/// v_F Q = kappa sqrt(A): the energy scale multiplying sqrt(n) in the spectrum.
double coupling_energy(const NCParams& params, const PhysicalScales& scales);

enum class Band : int { Valence = -1, Conduction = +1 };

struct LandauLevel {
    std::int64_t n;
    Band band;
    double energy;          // absolute, in the units of the scales
    double energy_reduced;  // energy / kappa
};

/// E = band * kappa * sqrt(A n). Throws DomainError for n < 0.
LandauLevel landau_level(std::int64_t n, Band band, const NCParams& params,
                         const PhysicalScales& scales = {});

/// l_B = sqrt(hbar / (e B)). Throws DomainError for B <= 0.
double magnetic_length(double field, double hbar = si::hbar, double e_charge = si::e_charge);

} // namespace ncg
