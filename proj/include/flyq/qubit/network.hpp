#pragma once

#include "flyq/qubit/gate.hpp"

#include <string_view>
#include <vector>

namespace flyq::qubit {

/// Ordered gate list written left to right as an operator product; the
/// rightmost gate acts first on input states.
struct NetworkSpec {
    std::vector<Gate> gates;
};

/// Product gates[0] * gates[1] * ... ; throws std::invalid_argument when empty.
Gate compose(const NetworkSpec& spec);

/// Ways of reading the network's matrices. `literal` is the canonical one used
/// everywhere outside the convention audit.
///  - literal:       V = diag(1, e^{i phi1}, e^{i phi2}, e^{i theta})
///  - reversed_v:    V diagonal reversed, theta on |1,1>
///  - swapped_basis: printed matrices read in the reversed basis order
///  - q_swap:        Q and Q^3 exchanged in the sequence
enum class Convention { literal, reversed_v, swapped_basis, q_swap };

inline constexpr Convention kAllConventions[] = {Convention::literal, Convention::reversed_v,
                                                 Convention::swapped_basis, Convention::q_swap};

std::string_view to_string(Convention c);

/// N = outer * D * middle * D * inner, with D the diagonal of the entangler.
/// All matrices are expressed in the canonical basis, whatever the convention.
struct NetworkLayout {
    Matrix4 outer;
    Matrix4 middle;
    Matrix4 inner;
};

NetworkLayout network_layout(Convention c);

/// Diagonal of the entangler V for parameters `p` in the canonical basis.
Amplitudes4 entangler_diagonal(const VParams& p, Convention c);

/// The eight-gate sequence Q_B Q_A V Q_B^3 Q_A^3 V Q_B Q_A ("literal").
NetworkSpec testing_network_spec(const Gate& v);

/// Effective canonical-basis operator for the testing network under `c`.
Gate testing_network(const VParams& p, Convention c = Convention::literal);

} // namespace flyq::qubit
