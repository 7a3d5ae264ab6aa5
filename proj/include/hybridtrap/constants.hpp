#pragma once

// Frozen physical constants (CODATA 2018). All formulas in the library pull
// from this table; nothing is looked up at runtime, so results are
// reproducible bit-for-bit across machines.

namespace hybridtrap::constants {

inline constexpr double speed_of_light = 299792458.0;        // m/s, exact
inline constexpr double hbar           = 1.054571817e-34;    // J s
inline constexpr double k_boltzmann    = 1.380649e-23;       // J/K, exact
inline constexpr double elementary_charge = 1.602176634e-19; // C, exact
inline constexpr double atomic_mass_unit  = 1.66053906660e-27; // kg

// Mass of an N2 molecule, the default background gas.
inline constexpr double nitrogen_molecule_mass = 28.0134 * atomic_mass_unit;

inline constexpr double pi     = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Epstein free-molecular drag prefactor for a specularly reflecting sphere.
inline constexpr double epstein_coefficient = 15.8;

}
