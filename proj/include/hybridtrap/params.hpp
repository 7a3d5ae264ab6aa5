#pragma once

#include <cmath>
#include <complex>

#include "hybridtrap/constants.hpp"
#include "hybridtrap/errors.hpp"
#include "hybridtrap/specs.hpp"

// Parameter engine: every physical quantity the dynamics, linear model and
// analysis layers consume, derived once from the raw specs. Pure functions
// over immutable inputs.

namespace hybridtrap {

struct DerivedParams {
    double mass = 0.0;           // kg
    double coupling_A = 0.0;     // rad/s, dispersive particle-cavity coupling
    double kappa = 0.0;          // rad/s, full cavity linewidth
    double omega_T_sq = 0.0;     // 1/s^2, Paul trap curvature parameter
    double gamma_M = 0.0;        // 1/s, gas damping
    std::complex<double> alpha_bar{0.0, 0.0};  // steady cavity amplitude
    double photon_n = 0.0;       // |alpha_bar|^2
    double mode_volume = 0.0;    // m^3
    double wavenumber_k = 0.0;   // 1/m

    // Carried along for downstream closed forms (not independent physics):
    double detuning = 0.0;       // rad/s, bare cavity detuning
    double waist = 0.0;          // m
    double pump_amplitude = 0.0; // rad/s, resolved pump E
};

// m = (4/3) pi r^3 rho
inline double derive_mass(const SphereSpec& sphere) {
    sphere.validate();
    return sphere.volume() * sphere.density;
}

// A = (3 Vs / 2 Vm) (eps_r - 1)/(eps_r + 2) omega_l, with Vm = pi w^2 L.
inline double derive_coupling_A(const SphereSpec& sphere,
                                const CavitySpec& cavity) {
    if (!(sphere.radius > 0.0))
        throw ValidationError("sphere.radius_m", "must be > 0");
    if (!(sphere.rel_permittivity >= 1.0))
        throw ValidationError("sphere.rel_permittivity", "must be >= 1");
    const double clausius_mossotti = (sphere.rel_permittivity - 1.0) /
                                     (sphere.rel_permittivity + 2.0);
    return 1.5 * sphere.volume() / cavity.mode_volume() * clausius_mossotti *
           cavity.laser_omega();
}

// Full angular linewidth of a Fabry-Perot cavity, kappa = pi c / (L F).
inline double derive_kappa(const CavitySpec& cavity) {
    if (!(cavity.length > 0.0))
        throw ValidationError("cavity.length_m", "must be > 0");
    if (!(cavity.finesse > 0.0))
        throw ValidationError("cavity.finesse", "must be > 0");
    return constants::pi * constants::speed_of_light /
           (cavity.length * cavity.finesse);
}

// Epstein free-molecular drag, gamma_M = 15.8 r^2 P / (m vbar). Linear in
// pressure; valid while the mean free path stays large against the sphere.
inline double derive_gas_damping(const SphereSpec& sphere, const GasSpec& gas) {
    gas.validate();
    const double mass = derive_mass(sphere);
    return constants::epstein_coefficient * sphere.radius * sphere.radius *
           gas.pressure / (mass * gas.mean_speed());
}

// omega_T^2 = 2 Q V0 / (m r0^2) with Q in coulombs.
inline double derive_omega_T_sq(const SphereSpec& sphere,
                                const PaulTrapSpec& paul) {
    paul.validate();
    const double mass = derive_mass(sphere);
    return 2.0 * sphere.charge_coulomb() * paul.voltage /
           (mass * paul.scale * paul.scale);
}

// Steady cavity amplitude at fixed particle position:
//   alpha = i E / (i Delta_eff - kappa/2),  |alpha|^2 = E^2/(Delta^2+k^2/4).
inline std::complex<double> derive_alpha_bar(double pump_amplitude,
                                             double detuning_eff,
                                             double kappa) {
    if (!(kappa > 0.0))
        throw ValidationError("cavity", "kappa must be > 0");
    const std::complex<double> numerator{0.0, pump_amplitude};
    const std::complex<double> denominator{-kappa / 2.0, detuning_eff};
    return numerator / denominator;
}

// Pump amplitude that produces a target mean photon number at a given
// effective detuning (inverse of |alpha_bar|^2 above).
inline double pump_for_photon_number(double target_n, double detuning_eff,
                                     double kappa) {
    if (!(kappa > 0.0))
        throw ValidationError("cavity", "kappa must be > 0");
    return std::sqrt(target_n *
                     (detuning_eff * detuning_eff + kappa * kappa / 4.0));
}

// Assemble the full table. The steady field is evaluated with the particle
// at a well-center antinode (cos^2 kx0 = 1, envelope = 1), where the
// effective detuning is Delta + A.
inline DerivedParams derive_params(const SphereSpec& sphere,
                                   const CavitySpec& cavity,
                                   const PaulTrapSpec& paul,
                                   const GasSpec& gas) {
    sphere.validate();
    cavity.validate();
    paul.validate();
    gas.validate();

    DerivedParams p;
    p.mass = derive_mass(sphere);
    p.coupling_A = derive_coupling_A(sphere, cavity);
    p.kappa = derive_kappa(cavity);
    p.omega_T_sq = derive_omega_T_sq(sphere, paul);
    p.gamma_M = derive_gas_damping(sphere, gas);
    p.mode_volume = cavity.mode_volume();
    p.wavenumber_k = cavity.wavenumber();
    p.detuning = cavity.detuning;
    p.waist = cavity.waist;

    const double detuning_eff = cavity.detuning + p.coupling_A;
    if (cavity.drive_amplitude) {
        p.pump_amplitude = *cavity.drive_amplitude;
    } else {
        p.pump_amplitude =
            pump_for_photon_number(*cavity.target_photon_n, detuning_eff,
                                   p.kappa);
    }
    p.alpha_bar = derive_alpha_bar(p.pump_amplitude, detuning_eff, p.kappa);
    p.photon_n = std::norm(p.alpha_bar);
    return p;
}

// Effective detuning seen by the drive with the particle held at axial
// position x (on axis, envelope = 1): Delta + A cos^2(kx).
inline double detuning_at(const DerivedParams& p, double x) {
    const double c = std::cos(p.wavenumber_k * x);
    return p.detuning + p.coupling_A * c * c;
}

}
