#include "flyq/gaas/pipeline.hpp"

#include "flyq/error.hpp"
#include "flyq/format.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace flyq::gaas {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be positive and finite");
    }
}

} // namespace

void validate(const MaterialConfig& cfg) {
    require_positive(cfg.omega0_nm, "omega0");
    require_positive(cfg.m_ratio, "effective-mass ratio");
    require_positive(cfg.width_nm, "lead width");
    require_positive(cfg.fermi, "Fermi energy");
    require_positive(cfg.v0, "barrier height v0");
    require_positive(cfg.alpha_inv, "interaction length 1/alpha");
    if (!(cfg.temperature_k >= 0.0) || !std::isfinite(cfg.temperature_k)) {
        throw DomainError("temperature must be non-negative");
    }
    if (cfg.delta_e && (!(*cfg.delta_e >= 0.0) || !std::isfinite(*cfg.delta_e))) {
        throw DomainError("delta_E must be non-negative");
    }
}

double derive_units(const MaterialConfig& cfg) {
    validate(cfg);
    return Constants::hbar2_over_2me_ev_nm2 / (cfg.m_ratio * cfg.omega0_nm * cfg.omega0_nm);
}

ChannelWindow channel_window(const MaterialConfig& cfg) {
    require_positive(cfg.width_nm, "lead width");
    require_positive(cfg.omega0_nm, "omega0");
    const double ratio = kPi * cfg.omega0_nm / cfg.width_nm;
    return {ratio * ratio, 4.0 * ratio * ratio};
}

double per_omega0_to_per_nm(double k, double omega0_nm) { return k / omega0_nm; }
double per_nm_to_per_omega0(double k, double omega0_nm) { return k * omega0_nm; }

Kinematics thermal_kinematics(const MaterialConfig& cfg) {
    validate(cfg);
    const ChannelWindow win = channel_window(cfg);
    Kinematics kin;
    kin.delta_e = cfg.delta_e ? *cfg.delta_e
                              : Constants::boltzmann_ev_per_k * cfg.temperature_k / derive_units(cfg);
    const double lower = cfg.fermi - kin.delta_e - win.e_min;
    if (lower < 0.0) {
        throw DomainError("Ef - delta_E lies below the first channel bottom");
    }
    kin.ka = std::sqrt(cfg.fermi + kin.delta_e - win.e_min);
    kin.kb = std::sqrt(lower);
    kin.delta_k = kin.ka - kin.kb;
    kin.delta_k_per_nm = per_omega0_to_per_nm(kin.delta_k, cfg.omega0_nm);
    return kin;
}

EntanglerReport entangler_report(const MaterialConfig& cfg) {
    validate(cfg);
    EntanglerReport rep;
    rep.e0_ev = derive_units(cfg);
    rep.window = channel_window(cfg);
    rep.kinematics = thermal_kinematics(cfg);
    rep.alpha = 1.0 / cfg.alpha_inv;
    rep.k_rel = scatter::relative_wavevector(rep.kinematics.ka, rep.kinematics.kb, cfg.relative);

    if (!(cfg.fermi > rep.window.e_min && cfg.fermi < rep.window.e_max)) {
        rep.warnings.push_back("Fermi energy outside the single-channel window");
    } else if (cfg.fermi + rep.kinematics.delta_e > rep.window.e_max) {
        rep.warnings.push_back("Ef + delta_E reaches the second channel");
    }

    const scatter::AmplitudePair amp = scatter::amplitudes({rep.k_rel, cfg.v0, rep.alpha});
    double phase = std::arg(amp.R);
    if (phase < 0.0) {
        phase += 2.0 * kPi;
    }
    rep.arg_r = phase;
    rep.delta_theta = std::abs(kPi - rep.arg_r);
    rep.r2 = std::norm(amp.R);
    rep.t2 = std::norm(amp.T);
    return rep;
}

std::string render(const EntanglerReport& r, const MaterialConfig& cfg) {
    std::ostringstream os;
    const auto line = [&os](const char* key, double v) {
        os << key << " = " << format_double(v) << '\n';
    };
    os << "# entangler report\n";
    line("omega0_nm", cfg.omega0_nm);
    line("m_ratio", cfg.m_ratio);
    line("width_nm", cfg.width_nm);
    line("fermi_E0", cfg.fermi);
    line("temperature_K", cfg.temperature_k);
    line("v0_E0", cfg.v0);
    line("alpha_omega0", r.alpha);
    os << "relative_momentum = "
       << (cfg.relative == scatter::RelativeMomentum::full_difference ? "full-difference"
                                                                        : "half-difference")
       << '\n';
    line("E0_eV", r.e0_ev);
    line("channel_min_E0", r.window.e_min);
    line("channel_max_E0", r.window.e_max);
    line("delta_E_E0", r.kinematics.delta_e);
    line("kA_per_omega0", r.kinematics.ka);
    line("kB_per_omega0", r.kinematics.kb);
    line("delta_k_per_omega0", r.kinematics.delta_k);
    line("delta_k_per_nm", r.kinematics.delta_k_per_nm);
    line("k_rel_per_omega0", r.k_rel);
    line("argR", r.arg_r);
    line("delta_theta", r.delta_theta);
    line("R2", r.r2);
    line("T2", r.t2);
    for (const std::string& w : r.warnings) {
        os << "warning = " << w << '\n';
    }
    return os.str();
}

} // namespace flyq::gaas
