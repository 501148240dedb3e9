#pragma once

#include "flyq/scatter/wavefunction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flyq::gaas {

/// Physical constants used by the pipeline.
struct Constants {
    static constexpr double hbar2_over_2me_ev_nm2 = 0.0380998; // 3.80998 eV A^2
    static constexpr double boltzmann_ev_per_k = 8.61733e-5;
};

/// GaAs/AlGaAs waveguide inputs. Energies are in units of E0 except where
/// noted; lengths in nm unless suffixed otherwise.
struct MaterialConfig {
    double omega0_nm = 40.0;
    double m_ratio = 0.067;
    double width_nm = 16.0;
    double fermi = 150.0;        // [E0]
    double temperature_k = 4.0;  // [K]
    double v0 = 32.14;           // [E0]
    double alpha_inv = 0.5;      // interaction length [omega0]
    std::optional<double> delta_e; // [E0]; overrides k_B T / E0 when set
    scatter::RelativeMomentum relative = scatter::RelativeMomentum::full_difference;
};

/// Throws DomainError for non-positive or non-finite inputs.
void validate(const MaterialConfig& cfg);

/// E0 = hbar^2 / (2 m* omega0^2) in eV.
double derive_units(const MaterialConfig& cfg);

struct ChannelWindow {
    double e_min = 0.0; // (pi omega0 / w)^2 [E0]
    double e_max = 0.0; // (2 pi omega0 / w)^2 [E0]
};

ChannelWindow channel_window(const MaterialConfig& cfg);

struct Kinematics {
    double delta_e = 0.0;      // [E0]
    double ka = 0.0;           // [1/omega0]
    double kb = 0.0;           // [1/omega0]
    double delta_k = 0.0;      // kA - kB [1/omega0]
    double delta_k_per_nm = 0.0;
};

/// kA,B = sqrt(Ef +- delta_E - Emin) in 1/omega0. Throws DomainError when
/// Ef - delta_E falls below the channel bottom.
Kinematics thermal_kinematics(const MaterialConfig& cfg);

double per_omega0_to_per_nm(double k, double omega0_nm);
double per_nm_to_per_omega0(double k, double omega0_nm);

struct EntanglerReport {
    double e0_ev = 0.0;
    ChannelWindow window;
    Kinematics kinematics;
    double k_rel = 0.0;       // relative wavevector fed to the scattering amplitudes [1/omega0]
    double alpha = 0.0;       // [1/omega0]
    double arg_r = 0.0;       // in [0, 2 pi)
    double delta_theta = 0.0; // |pi - arg_r|
    double r2 = 0.0;
    double t2 = 0.0;
    std::vector<std::string> warnings;
};

EntanglerReport entangler_report(const MaterialConfig& cfg);

/// key = value report, one entry per line.
std::string render(const EntanglerReport& report, const MaterialConfig& cfg);

} // namespace flyq::gaas
