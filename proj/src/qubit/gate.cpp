#include "flyq/qubit/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace flyq::qubit {

Gate::Gate(const Matrix4& entries) : entries_(entries) {
    const double defect = unitarity_defect(entries_);
    if (!(defect <= kUnitarityTolerance)) {
        throw std::invalid_argument("gate is not unitary (max |G^dagger G - I| = " +
                                    std::to_string(defect) + ")");
    }
}

Gate Gate::identity() { return Gate(identity4()); }

Gate Gate::adjoint() const { return Gate(flyq::adjoint(entries_)); }

Gate Gate::power(unsigned exponent) const {
    Matrix4 result = identity4();
    for (unsigned i = 0; i < exponent; ++i) {
        result = multiply(result, entries_);
    }
    return Gate(result);
}

Gate operator*(const Gate& lhs, const Gate& rhs) {
    return Gate(multiply(lhs.entries_, rhs.entries_));
}

namespace {

const cplx kP{0.5, 0.5};  // (1+i)/2
const cplx kM{0.5, -0.5}; // (1-i)/2

Matrix4 sqrt_not_a() {
    return {{{kP, 0, kM, 0}, {0, kP, 0, kM}, {kM, 0, kP, 0}, {0, kM, 0, kP}}};
}

Matrix4 sqrt_not_b() {
    return {{{kP, kM, 0, 0}, {kM, kP, 0, 0}, {0, 0, kP, kM}, {0, 0, kM, kP}}};
}

} // namespace

Gate make_gate(GateKind kind) {
    switch (kind) {
    case GateKind::QA:
        return Gate(sqrt_not_a());
    case GateKind::QB:
        return Gate(sqrt_not_b());
    case GateKind::QA3:
        return Gate(sqrt_not_a()).power(3);
    case GateKind::QB3:
        return Gate(sqrt_not_b()).power(3);
    }
    throw std::invalid_argument("unknown gate kind");
}

Gate not_gate(Qubit q) {
    if (q == Qubit::A) {
        return Gate(Matrix4{{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}});
    }
    return Gate(Matrix4{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}});
}

Gate make_v(const VParams& p) {
    return Gate(diagonal({1.0, std::polar(1.0, p.phi1), std::polar(1.0, p.phi2),
                          std::polar(1.0, p.theta)}));
}

TwoQubitState apply(const Gate& g, const TwoQubitState& s) {
    return TwoQubitState(multiply(g.entries(), s.amplitudes()));
}

TwoQubitState apply(const Matrix4& m, const TwoQubitState& s) {
    return apply(Gate(m), s);
}

double wrap_two_pi(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(angle, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r -= two_pi;
    }
    return r;
}

Entanglement classify_v(const VParams& p) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double mismatch = wrap_two_pi(p.phi1 + p.phi2 - p.theta);
    const double distance = std::min(mismatch, two_pi - mismatch);
    return distance <= kPhaseTolerance ? Entanglement::non_entangling : Entanglement::entangling;
}

bool factorizes(const Gate& g, double tolerance) {
    // Realignment: R[(ia,ja)][(ib,jb)] = G[2 ia + ib][2 ja + jb]; G = A (x) B
    // iff R = vec(A) vec(B)^T, i.e. R has rank one.
    Matrix4 r{};
    for (std::size_t ia = 0; ia < 2; ++ia) {
        for (std::size_t ja = 0; ja < 2; ++ja) {
            for (std::size_t ib = 0; ib < 2; ++ib) {
                for (std::size_t jb = 0; jb < 2; ++jb) {
                    r[2 * ia + ja][2 * ib + jb] = g(2 * ia + ib, 2 * ja + jb);
                }
            }
        }
    }
    for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t q = p + 1; q < 4; ++q) {
            for (std::size_t u = 0; u < 4; ++u) {
                for (std::size_t v = u + 1; v < 4; ++v) {
                    const cplx minor = r[p][u] * r[q][v] - r[p][v] * r[q][u];
                    if (std::abs(minor) > tolerance) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace flyq::qubit
