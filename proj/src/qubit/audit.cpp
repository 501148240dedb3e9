#include "flyq/qubit/audit.hpp"

#include "flyq/format.hpp"
#include "flyq/qubit/sweep.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace flyq::qubit {

namespace {

constexpr double kPi = std::numbers::pi;

const char* label(Basis b) {
    switch (b) {
    case Basis::k11:
        return "|1,1>";
    case Basis::k10:
        return "|1,0>";
    case Basis::k01:
        return "|0,1>";
    case Basis::k00:
        return "|0,0>";
    }
    return "?";
}

bool close_to(const Amplitudes4& a, const Amplitudes4& b, double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

Amplitudes4 output_from_11(const VParams& p, Convention c) {
    return apply(testing_network(p, c), TwoQubitState::basis(Basis::k11)).amplitudes();
}

} // namespace

std::optional<BasisReadout> read_basis_state(const Amplitudes4& amplitudes, double tolerance) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(std::abs(amplitudes[i]) - 1.0) <= tolerance) {
            double phase = std::arg(amplitudes[i]) / kPi;
            if (phase < 0.0) {
                phase += 2.0;
            }
            // Values within rounding of 2 read as 0.
            if (phase > 2.0 - 1e-12) {
                phase = 0.0;
            }
            return BasisReadout{static_cast<Basis>(i), phase};
        }
    }
    return std::nullopt;
}

std::string describe(const Amplitudes4& amplitudes) {
    if (const auto r = read_basis_state(amplitudes, 1e-9)) {
        const double rounded = std::round(r->phase_over_pi * 1e9) / 1e9;
        return "e^{i*" + format_double(rounded) + "*pi}" + label(r->label);
    }
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        s += format_double(amplitudes[i].real()) + (amplitudes[i].imag() < 0 ? "-" : "+") +
             format_double(std::abs(amplitudes[i].imag())) + "i";
        s += i + 1 < 4 ? ", " : ")";
    }
    return s;
}

AuditReport convention_audit() {
    const cplx minus_i{0.0, -1.0}; // e^{i 3pi/2}
    const Amplitudes4 claim_entangling{0.0, 0.0, minus_i, 0.0};
    const Amplitudes4 claim_non{0.0, minus_i, 0.0, 0.0};

    AuditReport report;
    for (Convention c : kAllConventions) {
        AuditCase ac;
        ac.convention = c;
        ac.entangling_output = output_from_11({0.0, 0.0, kPi}, c);
        ac.non_entangling_output = output_from_11({kPi / 2, kPi / 2, kPi}, c);
        ac.matches_entangling_claim = close_to(ac.entangling_output, claim_entangling, 1e-9);
        ac.matches_non_entangling_claim = close_to(ac.non_entangling_output, claim_non, 1e-9);

        SweepGrid grid;
        grid.theta_min = 0.75 * kPi;
        grid.theta_max = 1.25 * kPi;
        grid.theta_steps = 101;
        SweepOptions opts;
        opts.convention = c;
        opts.simd = simd::SimdLevel::scalar;
        const SweepTable t = sweep(SweepMode::fig4, grid, opts);
        double ent = 0.0;
        double non = 0.0;
        for (const SweepRow& row : t.rows) {
            ent += row.entangling.prob_a1;
            non += row.non_entangling.prob_a1;
        }
        ac.mean_prob_a1_entangling = ent / static_cast<double>(t.rows.size());
        ac.mean_prob_a1_non_entangling = non / static_cast<double>(t.rows.size());
        ac.a1_dominance_contrast = ac.mean_prob_a1_entangling > 0.5 &&
                                   ac.mean_prob_a1_non_entangling < 0.5;

        report.any_matches_entangling_claim |= ac.matches_entangling_claim;
        report.any_matches_non_entangling_claim |= ac.matches_non_entangling_claim;
        report.cases.push_back(ac);
    }
    return report;
}

std::string audit_text(const AuditReport& report) {
    std::ostringstream os;
    os << "Convention audit: testing network applied to |1,1> at theta = pi\n";
    os << "claimed entangling output      e^{i*1.5*pi}|0,1>  (V = diag(1, 1, 1, e^{i pi}))\n";
    os << "claimed non-entangling output  e^{i*1.5*pi}|1,0>  (V = diag(1, i, i, e^{i pi}))\n\n";
    for (const AuditCase& c : report.cases) {
        os << "[" << to_string(c.convention) << "]\n";
        os << "  entangling      N|1,1> = " << describe(c.entangling_output)
           << (c.matches_entangling_claim ? "  (matches claim)" : "  (does not match claim)")
           << '\n';
        os << "  non-entangling  N|1,1> = " << describe(c.non_entangling_output)
           << (c.matches_non_entangling_claim ? "  (matches claim)" : "  (does not match claim)")
           << '\n';
        os << "  mean Prob_A(|1>) over theta in [3pi/4, 5pi/4]: entangling = "
           << format_double(c.mean_prob_a1_entangling)
           << ", non-entangling = " << format_double(c.mean_prob_a1_non_entangling)
           << (c.a1_dominance_contrast ? "  (|1>_A dominance contrast present)"
                                       : "  (no |1>_A dominance contrast)")
           << '\n';
    }
    os << '\n';
    if (!report.any_matches_entangling_claim && !report.any_matches_non_entangling_claim) {
        os << "conclusion: no audited convention reproduces the claimed e^{i*1.5*pi}|0,1> or "
              "e^{i*1.5*pi}|1,0> outputs\n";
    } else {
        os << "conclusion: entangling claim reproduced = "
           << (report.any_matches_entangling_claim ? "yes" : "no")
           << ", non-entangling claim reproduced = "
           << (report.any_matches_non_entangling_claim ? "yes" : "no") << '\n';
    }
    return os.str();
}

std::string audit_csv(const AuditReport& report) {
    std::ostringstream os;
    os << "convention,gate,c11_re,c11_im,c10_re,c10_im,c01_re,c01_im,c00_re,c00_im,readout,"
          "matches_claim,mean_probA1\n";
    for (const AuditCase& c : report.cases) {
        const auto row = [&](const char* gate, const Amplitudes4& a, bool match, double mean) {
            os << to_string(c.convention) << ',' << gate;
            for (const cplx& z : a) {
                os << ',' << format_double(z.real()) << ',' << format_double(z.imag());
            }
            os << ",\"" << describe(a) << "\"," << (match ? 1 : 0) << ',' << format_double(mean)
               << '\n';
        };
        row("entangling", c.entangling_output, c.matches_entangling_claim,
            c.mean_prob_a1_entangling);
        row("non-entangling", c.non_entangling_output, c.matches_non_entangling_claim,
            c.mean_prob_a1_non_entangling);
    }
    return os.str();
}

} // namespace flyq::qubit
