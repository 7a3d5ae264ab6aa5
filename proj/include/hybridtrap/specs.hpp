#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "hybridtrap/constants.hpp"
#include "hybridtrap/errors.hpp"

// Raw experimental inputs, SI units throughout. Validation lives next to the
// types; every other module may assume a validated spec.

namespace hybridtrap {

struct SphereSpec {
    double radius = 209e-9;          // m
    double density = 2200.0;         // kg/m^3, fused silica default
    double rel_permittivity = 2.1;   // dimensionless, fused silica at 1064 nm
    int charge_count = 1;            // elementary charges on the sphere

    double volume() const {
        return 4.0 / 3.0 * constants::pi * radius * radius * radius;
    }
    double charge_coulomb() const {
        return charge_count * constants::elementary_charge;
    }

    void validate(const std::string& prefix = "sphere") const {
        if (!(radius > 0.0))
            throw ValidationError(prefix + ".radius_m", "must be > 0");
        if (!(density > 0.0))
            throw ValidationError(prefix + ".density_kg_m3", "must be > 0");
        if (!(rel_permittivity > 1.0))
            throw ValidationError(prefix + ".rel_permittivity", "must be > 1");
        if (charge_count < 0)
            throw ValidationError(prefix + ".charge_count", "must be >= 0");
    }
};

struct CavitySpec {
    double wavelength = 1064e-9;  // m
    double waist = 60e-6;         // m
    double length = 13e-3;        // m
    double finesse = 50000.0;     // dimensionless

    // Detuning of the drive from the empty-cavity resonance, rad/s.
    // Positive detuning (red side in this convention) gives cooling once the
    // particle shift is added in.
    double detuning = 0.0;

    // Exactly one of the two drive specifications must be set: the pump
    // amplitude in rad/s, or a target mean intracavity photon number from
    // which the pump is solved.
    std::optional<double> drive_amplitude;   // rad/s
    std::optional<double> target_photon_n;   // dimensionless

    double wavenumber() const { return constants::two_pi / wavelength; }
    double laser_omega() const {
        return constants::two_pi * constants::speed_of_light / wavelength;
    }
    double mode_volume() const {
        return constants::pi * waist * waist * length;
    }

    void validate(const std::string& prefix = "cavity") const {
        if (!(wavelength > 0.0))
            throw ValidationError(prefix + ".wavelength_m", "must be > 0");
        if (!(waist > 0.0))
            throw ValidationError(prefix + ".waist_m", "must be > 0");
        if (!(length > 0.0))
            throw ValidationError(prefix + ".length_m", "must be > 0");
        if (!(finesse > 0.0))
            throw ValidationError(prefix + ".finesse", "must be > 0");
        if (drive_amplitude.has_value() == target_photon_n.has_value())
            throw ValidationError(prefix,
                "exactly one of drive_amplitude_rad_s / target_photon_number "
                "must be supplied");
        if (drive_amplitude && !(*drive_amplitude >= 0.0))
            throw ValidationError(prefix + ".drive_amplitude_rad_s",
                                  "must be >= 0");
        if (target_photon_n && !(*target_photon_n >= 0.0))
            throw ValidationError(prefix + ".target_photon_number",
                                  "must be >= 0");
    }
};

struct PaulTrapSpec {
    double drive_freq = constants::two_pi * 1500.0;  // rad/s
    double voltage = 300.0;                          // V
    double scale = 1e-3;                             // m, potential scale r0

    void validate(const std::string& prefix = "paul") const {
        if (!(drive_freq > 0.0))
            throw ValidationError(prefix + ".drive_freq_rad_s", "must be > 0");
        if (!(voltage > 0.0))
            throw ValidationError(prefix + ".voltage_v", "must be > 0");
        if (!(scale > 0.0))
            throw ValidationError(prefix + ".scale_m", "must be > 0");
    }
};

struct GasSpec {
    double pressure = 3e-2;      // Pa
    double temperature = 300.0;  // K
    double molecule_mass = constants::nitrogen_molecule_mass;  // kg

    // Mean thermal speed of a gas molecule.
    double mean_speed() const {
        return std::sqrt(8.0 * constants::k_boltzmann * temperature /
                         (constants::pi * molecule_mass));
    }

    void validate(const std::string& prefix = "gas") const {
        if (!(pressure >= 0.0))
            throw ValidationError(prefix + ".pressure_pa", "must be >= 0");
        if (!(temperature > 0.0))
            throw ValidationError(prefix + ".temperature_k", "must be > 0");
        if (!(molecule_mass > 0.0))
            throw ValidationError(prefix + ".molecule_mass_kg", "must be > 0");
    }
};

}
