#pragma once

#include "flyq/qubit/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flyq::qubit {

/// Output written as e^{i pi * phase_over_pi} |label>, when it is a basis
/// state up to a global phase.
struct BasisReadout {
    Basis label = Basis::k11;
    double phase_over_pi = 0.0; // in [0, 2)
};

std::optional<BasisReadout> read_basis_state(const Amplitudes4& amplitudes,
                                             double tolerance = 1e-12);

std::string describe(const Amplitudes4& amplitudes);

struct AuditCase {
    Convention convention = Convention::literal;
    Amplitudes4 entangling_output{};     // N|1,1>, V(0, 0, pi)
    Amplitudes4 non_entangling_output{}; // N|1,1>, V(pi/2, pi/2, pi)
    bool matches_entangling_claim = false; // == e^{i 3pi/2}|0,1>
    bool matches_non_entangling_claim = false; // == e^{i 3pi/2}|1,0>
    // Qubit-A marginals averaged over theta in [3pi/4, 5pi/4] (phi = theta/2
    // for the non-entangling gate).
    double mean_prob_a1_entangling = 0.0;
    double mean_prob_a1_non_entangling = 0.0;
    // |1>_A dominates for the entangling network and |0>_A for the other.
    bool a1_dominance_contrast = false;
};

struct AuditReport {
    std::vector<AuditCase> cases;
    bool any_matches_entangling_claim = false;
    bool any_matches_non_entangling_claim = false;
};

/// Evaluates the testing network from |1,1> at theta = pi under every
/// Convention and compares with the claimed outputs e^{i3pi/2}|0,1>
/// (entangling) and e^{i3pi/2}|1,0> (non-entangling).
AuditReport convention_audit();

std::string audit_text(const AuditReport& report);
std::string audit_csv(const AuditReport& report);

} // namespace flyq::qubit
