#include "flyq/qubit/network.hpp"

#include <stdexcept>

namespace flyq::qubit {

Gate compose(const NetworkSpec& spec) {
    if (spec.gates.empty()) {
        throw std::invalid_argument("network spec has no gates");
    }
    Gate product = spec.gates.front();
    for (std::size_t i = 1; i < spec.gates.size(); ++i) {
        product = product * spec.gates[i];
    }
    return product;
}

std::string_view to_string(Convention c) {
    switch (c) {
    case Convention::literal:
        return "literal";
    case Convention::reversed_v:
        return "reversed-v";
    case Convention::swapped_basis:
        return "swapped-basis";
    case Convention::q_swap:
        return "q-swap";
    }
    return "unknown";
}

namespace {

// J M J for the basis-reversal permutation J.
Matrix4 reverse_basis(const Matrix4& m) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i][j] = m[3 - i][3 - j];
        }
    }
    return out;
}

} // namespace

NetworkLayout network_layout(Convention c) {
    const Matrix4 q = (make_gate(GateKind::QB) * make_gate(GateKind::QA)).entries();
    const Matrix4 q3 = (make_gate(GateKind::QB3) * make_gate(GateKind::QA3)).entries();
    switch (c) {
    case Convention::literal:
    case Convention::reversed_v:
        return {q, q3, q};
    case Convention::swapped_basis:
        return {reverse_basis(q), reverse_basis(q3), reverse_basis(q)};
    case Convention::q_swap:
        return {q3, q, q3};
    }
    throw std::invalid_argument("unknown convention");
}

Amplitudes4 entangler_diagonal(const VParams& p, Convention c) {
    const Amplitudes4 literal{1.0, std::polar(1.0, p.phi1), std::polar(1.0, p.phi2),
                              std::polar(1.0, p.theta)};
    switch (c) {
    case Convention::literal:
    case Convention::q_swap:
        return literal;
    case Convention::reversed_v:
    case Convention::swapped_basis:
        // swapped_basis: J diag(d) J reverses the diagonal as well.
        return {literal[3], literal[2], literal[1], literal[0]};
    }
    throw std::invalid_argument("unknown convention");
}

NetworkSpec testing_network_spec(const Gate& v) {
    const Gate qa = make_gate(GateKind::QA);
    const Gate qb = make_gate(GateKind::QB);
    const Gate qa3 = make_gate(GateKind::QA3);
    const Gate qb3 = make_gate(GateKind::QB3);
    return NetworkSpec{{qb, qa, v, qb3, qa3, v, qb, qa}};
}

Gate testing_network(const VParams& p, Convention c) {
    const NetworkLayout layout = network_layout(c);
    const Gate v(diagonal(entangler_diagonal(p, c)));
    return Gate(layout.outer) * v * Gate(layout.middle) * v * Gate(layout.inner);
}

} // namespace flyq::qubit
