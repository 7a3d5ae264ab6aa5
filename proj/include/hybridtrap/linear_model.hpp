#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "hybridtrap/constants.hpp"
#include "hybridtrap/errors.hpp"
#include "hybridtrap/params.hpp"
#include "hybridtrap/specs.hpp"

// Closed-form layer: linearization of the coupled particle-cavity dynamics
// about a trapped well, the drive-phase equilibrium excursion, the
// optomechanical cooling rate, and the cavity-shifted secular frequency.

namespace hybridtrap {

// A standing-wave well of the cavity potential, counted from the Paul trap
// center. The equilibrium offset is k x0 = N pi.
struct WellSite {
    int well_index = 0;              // N
    double equilibrium_offset = 0.0; // m, x0 = N pi / k
    double drive_phase = 0.0;        // rad, phase of the Paul drive

    static WellSite at_index(int n, double wavenumber, double phase = 0.0) {
        if (n < 0) throw ValidationError("well.index", "must be >= 0");
        WellSite w;
        w.well_index = n;
        w.equilibrium_offset = n * constants::pi / wavenumber;
        w.drive_phase = phase;
        return w;
    }
};

struct LinearizedModel {
    double G1 = 0.0;            // rad/(s m), linear coupling
    double G2 = 0.0;            // rad/(s m^2), quadratic coupling
    double omega_M = 0.0;       // rad/s, mechanical frequency in the well
    double duffing_eps = 0.0;   // 1/m, cubic anharmonicity k tan(2 k x0)
    double detuning_eff = 0.0;  // rad/s, Delta + A cos^2(k x0)
    double x_zpf = 0.0;         // m, sqrt(hbar / 2 m omega_M)
    double g1_single = 0.0;     // rad/s, k A x_zpf
    double g2_single = 0.0;     // rad/s, k^2 A x_zpf^2
    double gamma_opt = 0.0;     // 1/s, cooling rate at this x0
    double omega_s = 0.0;       // rad/s, cavity-shifted secular frequency

    // Carried for downstream rate evaluations.
    double kA_alpha = 0.0;      // rad/(s m), k A |alpha_bar|
    double mass = 0.0;          // kg
    double wavenumber_k = 0.0;  // 1/m
};

// Lorentzian cavity response weight S(w) = [(Delta_eff - w)^2 + k^2/4]^-1.
inline double cavity_susceptibility(double omega, double detuning_eff,
                                    double kappa) {
    const double d = detuning_eff - omega;
    return 1.0 / (d * d + kappa * kappa / 4.0);
}

// Cooling rate at a fixed displacement phase, with the linear coupling taken
// per phonon: Gamma = (k A |alpha| sin(2 k x0) x_zpf)^2 kappa [S(wM)-S(-wM)].
inline double cooling_rate_at(const LinearizedModel& model, double kappa,
                              double sin_2kx0) {
    if (!(model.omega_M > 0.0))
        throw ValidationError("model.omega_M", "must be > 0");
    if (!(kappa > 0.0)) throw ValidationError("kappa", "must be > 0");
    const double g = model.kA_alpha * sin_2kx0 * model.x_zpf;
    const double ds =
        cavity_susceptibility(model.omega_M, model.detuning_eff, kappa) -
        cavity_susceptibility(-model.omega_M, model.detuning_eff, kappa);
    return g * g * kappa * ds;
}

struct CycleCoolingRate {
    double peak = 0.0;           // 1/s, max over the drive cycle
    double cycle_average = 0.0;  // 1/s, <sin^2(2 k x0(t))> over one period
};

// The Paul drive sweeps x0(t) = -amp sin(wd t), so the coupling angle
// 2 k x0(t) oscillates with amplitude z = 2 k amp. Both the peak and the
// drive-cycle-averaged rate are reported; S is held at the well-center
// detuning (excursion corrections to S are second order).
inline CycleCoolingRate cooling_rate_over_cycle(const LinearizedModel& model,
                                                double kappa,
                                                double excursion_angle_2k) {
    const double z = std::abs(excursion_angle_2k);
    const double sin_peak = (z >= constants::pi / 2.0) ? 1.0 : std::sin(z);

    // <sin^2(z sin theta)> by trapezoid over one period (exactly (1-J0(2z))/2).
    const int n_grid = 512;
    double avg = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double theta = constants::two_pi * i / n_grid;
        const double s = std::sin(z * std::sin(theta));
        avg += s * s;
    }
    avg /= n_grid;

    CycleCoolingRate out;
    out.peak = cooling_rate_at(model, kappa, sin_peak);
    const double unit = cooling_rate_at(model, kappa, 1.0);
    out.cycle_average = unit * avg;
    return out;
}

// Drive-cycle average of the local oscillation frequency,
// <sqrt(cos(2 k x0(t)))>: the excursion flattens the well bottom, so the
// spectral line sits below the well-center omega_M by this factor.
inline double cycle_frequency_factor(double excursion_angle_2k) {
    const double z = std::abs(excursion_angle_2k);
    const int n_grid = 512;
    double avg = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double theta = constants::two_pi * i / n_grid;
        const double c = std::cos(z * std::sin(theta));
        avg += (c > 0.0) ? std::sqrt(c) : 0.0;
    }
    return avg / n_grid;
}

// Peak excursion of the equilibrium point: amp = (wT^2 / wM^2) x0 with
// x0 = N pi / k; the full time course is x0(t) = -amp sin(wd t + phase).
inline double excursion_amplitude(const WellSite& well, double omega_T_sq,
                                  double omega_M) {
    if (!(omega_M > 0.0))
        throw ValidationError("omega_M", "must be > 0");
    return omega_T_sq / (omega_M * omega_M) * well.equilibrium_offset;
}

// Cavity-shifted secular frequency:
//   ws = (wd/2) sqrt(16 hbar A n/(m w^2 wd^2) + 8 Q^2 V0^2/(m wd^2 r0^2)^2).
// The first term is the radial optical confinement, the second the bare
// Paul-trap secular frequency; at n = 0 this reduces to wT^2/(sqrt(2) wd).
inline double secular_frequency(const DerivedParams& params,
                                const PaulTrapSpec& paul, double photon_n) {
    if (!(photon_n >= 0.0))
        throw ValidationError("photon_n", "must be >= 0");
    const double wd = paul.drive_freq;
    const double optical = 16.0 * constants::hbar * params.coupling_A *
                           photon_n /
                           (params.mass * params.waist * params.waist * wd * wd);
    // 8 Q^2 V0^2 / (m wd^2 r0^2)^2 rewritten through omega_T^2 = 2 Q V0/(m r0^2):
    const double trap = 2.0 * params.omega_T_sq * params.omega_T_sq /
                        (wd * wd * wd * wd);
    return wd / 2.0 * std::sqrt(optical + trap);
}

// Linearize about axial position x0 (absolute, in the standing wave).
// Requires cos(2 k x0) > 0, i.e. a trapping well of the optical potential.
inline LinearizedModel linearize_at(double x0, const DerivedParams& params) {
    const double k = params.wavenumber_k;
    const double cos2 = std::cos(2.0 * k * x0);
    const double sin2 = std::sin(2.0 * k * x0);
    if (!(cos2 > 0.0))
        throw NotAWellError("cos(2 k x0) <= 0: not a trapping well");

    const double alpha_mag = std::sqrt(params.photon_n);
    const double cos_kx0 = std::cos(k * x0);

    LinearizedModel m;
    m.mass = params.mass;
    m.wavenumber_k = k;
    m.kA_alpha = k * params.coupling_A * alpha_mag;
    m.G1 = m.kA_alpha * sin2;
    m.G2 = k * k * params.coupling_A * alpha_mag * cos2;
    m.duffing_eps = k * std::tan(2.0 * k * x0);
    m.detuning_eff = params.detuning + params.coupling_A * cos_kx0 * cos_kx0;
    m.omega_M = std::sqrt(2.0 * constants::hbar * k * k * params.coupling_A *
                          params.photon_n * cos2 / params.mass);
    if (m.omega_M > 0.0) {
        m.x_zpf = std::sqrt(constants::hbar / (2.0 * params.mass * m.omega_M));
        m.g1_single = k * params.coupling_A * m.x_zpf;
        m.g2_single = k * k * params.coupling_A * m.x_zpf * m.x_zpf;
        m.gamma_opt = cooling_rate_at(m, params.kappa, sin2);
    }
    return m;
}

// Same, but also fills the secular frequency (needs the Paul drive).
inline LinearizedModel linearize_at(double x0, const DerivedParams& params,
                                    const PaulTrapSpec& paul) {
    LinearizedModel m = linearize_at(x0, params);
    m.omega_s = secular_frequency(params, paul, params.photon_n);
    return m;
}

// Two-bath balance between gas heating and optical cooling:
//   T_eff = T_B gamma_M / (gamma_M + Gamma_opt).
struct SteadyState {
    double temperature = 0.0;  // K
    double reduction = 0.0;    // T_B / T_eff
};

inline SteadyState steady_state_temperature(double gamma_M, double gamma_opt,
                                            double bath_temperature) {
    if (!(gamma_M >= 0.0) || !(gamma_opt >= 0.0))
        throw ValidationError("rates", "must be >= 0");
    if (gamma_M == 0.0 && gamma_opt == 0.0)
        throw UndefinedEquilibriumError(
            "both damping rates are zero: no steady state");
    SteadyState s;
    if (gamma_M == 0.0) {
        s.temperature = 0.0;
        s.reduction = std::numeric_limits<double>::infinity();
        return s;
    }
    s.temperature = bath_temperature * gamma_M / (gamma_M + gamma_opt);
    s.reduction = (gamma_M + gamma_opt) / gamma_M;
    return s;
}

// Mean thermal occupancy n_p = kB T / (hbar omega_M) - 1/2, floored at 0.
inline double phonon_occupancy(double temperature, double omega_M) {
    if (!(temperature > 0.0))
        throw ValidationError("temperature", "must be > 0");
    if (!(omega_M > 0.0))
        throw ValidationError("omega_M", "must be > 0");
    const double n = constants::k_boltzmann * temperature /
                         (constants::hbar * omega_M) -
                     0.5;
    return n > 0.0 ? n : 0.0;
}

}
