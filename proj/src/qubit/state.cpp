#include "flyq/qubit/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace flyq::qubit {

TwoQubitState::TwoQubitState(const Amplitudes4& amplitudes) : amplitudes_(amplitudes) {
    const double n2 = norm_squared(amplitudes_);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("two-qubit state is not normalized (|psi|^2 = " +
                                    std::to_string(n2) + ")");
    }
}

TwoQubitState TwoQubitState::basis(Basis b) {
    Amplitudes4 a{};
    a[static_cast<std::size_t>(b)] = 1.0;
    return TwoQubitState(a);
}

TwoQubitState TwoQubitState::normalized(const Amplitudes4& amplitudes) {
    const double n = std::sqrt(norm_squared(amplitudes));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    Amplitudes4 a = amplitudes;
    for (cplx& c : a) {
        c /= n;
    }
    return TwoQubitState(a);
}

TwoQubitState TwoQubitState::product(cplx a1, cplx a0, cplx b1, cplx b0) {
    return normalized({a1 * b1, a1 * b0, a0 * b1, a0 * b0});
}

TwoQubitState TwoQubitState::with_global_phase(double gamma) const {
    const cplx phase = std::polar(1.0, gamma);
    Amplitudes4 a = amplitudes_;
    for (cplx& c : a) {
        c *= phase;
    }
    return TwoQubitState::normalized(a);
}

double basis_probability(const TwoQubitState& s, int index) {
    if (index < 1 || index > 4) {
        throw std::out_of_range("basis index must be in 1..4, got " + std::to_string(index));
    }
    return std::norm(s.amplitudes()[static_cast<std::size_t>(index - 1)]);
}

double basis_probability(const TwoQubitState& s, Basis b) {
    return std::norm(s[b]);
}

double marginal_prob(const TwoQubitState& s, Qubit qubit, int level) {
    if (level != 0 && level != 1) {
        throw std::out_of_range("qubit level must be 0 or 1");
    }
    const auto& c = s.amplitudes();
    // Slots: 0=|1,1>, 1=|1,0>, 2=|0,1>, 3=|0,0>.
    if (qubit == Qubit::A) {
        return level == 1 ? std::norm(c[0]) + std::norm(c[1]) : std::norm(c[2]) + std::norm(c[3]);
    }
    return level == 1 ? std::norm(c[0]) + std::norm(c[2]) : std::norm(c[1]) + std::norm(c[3]);
}

double concurrence(const TwoQubitState& s) {
    const auto& c = s.amplitudes();
    return 2.0 * std::abs(c[0] * c[3] - c[1] * c[2]);
}

} // namespace flyq::qubit
