#pragma once

#include "flyq/linalg4.hpp"
#include "flyq/qubit/state.hpp"

namespace flyq::qubit {

inline constexpr double kUnitarityTolerance = 1e-12;

/// 4x4 unitary acting on TwoQubitState amplitudes. The constructor rejects
/// matrices whose G^dagger G deviates from I by more than kUnitarityTolerance.
class Gate {
public:
    explicit Gate(const Matrix4& entries);

    static Gate identity();

    const Matrix4& entries() const noexcept { return entries_; }
    cplx operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }

    Gate adjoint() const;
    Gate power(unsigned exponent) const;

    friend Gate operator*(const Gate& lhs, const Gate& rhs);

private:
    Matrix4 entries_;
};

/// Square-root-of-NOT gates on either qubit and their cubes.
enum class GateKind { QA, QB, QA3, QB3 };

Gate make_gate(GateKind kind);

/// NOT on qubit A (or B), used as a reference in tests and the audit.
Gate not_gate(Qubit q);

struct VParams {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double theta = 0.0;
};

/// diag(1, e^{i phi1}, e^{i phi2}, e^{i theta}) in the basis order of
/// TwoQubitState.
Gate make_v(const VParams& p);

/// Matrix-vector product. Gate construction already guarantees unitarity;
/// the overload taking a raw matrix validates it first.
TwoQubitState apply(const Gate& g, const TwoQubitState& s);
TwoQubitState apply(const Matrix4& m, const TwoQubitState& s);

enum class Entanglement { entangling, non_entangling };

inline constexpr double kPhaseTolerance = 1e-9;

/// Non-entangling iff phi1 + phi2 == theta (mod 2 pi) within kPhaseTolerance.
Entanglement classify_v(const VParams& p);

/// True when `g` is A (x) B for two single-qubit operators, via the
/// realignment rank-one test.
bool factorizes(const Gate& g, double tolerance = 1e-12);

/// Reduce an angle into [0, 2 pi).
double wrap_two_pi(double angle);

} // namespace flyq::qubit
