#pragma once

#include "flyq/linalg4.hpp"

#include <cstddef>

namespace flyq::qubit {

// Basis slots in the fixed order |1,1>, |1,0>, |0,1>, |0,0>. The first label
// is qubit A.
enum class Basis : std::size_t { k11 = 0, k10 = 1, k01 = 2, k00 = 3 };

enum class Qubit { A, B };

inline constexpr double kNormTolerance = 1e-12;

/// Pure two-qubit state with unit norm.
///
/// Construction validates the norm; the only way to obtain a state with a
/// different norm is through `normalized`, which rescales.
class TwoQubitState {
public:
    /// Throws std::invalid_argument if | |c|^2 - 1 | exceeds kNormTolerance.
    explicit TwoQubitState(const Amplitudes4& amplitudes);

    static TwoQubitState basis(Basis b);
    /// Rescales to unit norm; throws on the zero vector.
    static TwoQubitState normalized(const Amplitudes4& amplitudes);
    /// (a|1> + b|0>)_A (x) (c|1> + d|0>)_B, normalized.
    static TwoQubitState product(cplx a1, cplx a0, cplx b1, cplx b0);

    const Amplitudes4& amplitudes() const noexcept { return amplitudes_; }
    cplx operator[](Basis b) const noexcept { return amplitudes_[static_cast<std::size_t>(b)]; }

    TwoQubitState with_global_phase(double gamma) const;

private:
    Amplitudes4 amplitudes_;
};

/// |c_index|^2 with index in 1..4 (1 = |1,1>). Throws std::out_of_range.
double basis_probability(const TwoQubitState& s, int index);
double basis_probability(const TwoQubitState& s, Basis b);

/// Probability of finding `qubit` in `level` (0 or 1).
double marginal_prob(const TwoQubitState& s, Qubit qubit, int level);

/// Pure-state concurrence 2|c11 c00 - c10 c01|.
double concurrence(const TwoQubitState& s);

} // namespace flyq::qubit
