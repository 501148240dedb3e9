#pragma once

#include "flyq/scatter/special_functions.hpp"

#include <span>
#include <vector>

namespace flyq::scatter {

// Units: lengths in omega0, energies in E0 = hbar^2 / (2 m omega0^2),
// wavevectors in 1/omega0. The relative motion has kinetic term p^2/m, so
// k = sqrt(Er / 2) and 4 m V0 / (alpha hbar)^2 = 2 v0 / alpha^2.

/// sech^2 barrier of height v0 [E0] and inverse width alpha [1/omega0].
struct Barrier {
    double v0 = 0.0;
    double alpha = 0.0;
};

struct ScatterParams {
    double k = 0.0;     // relative wavevector [1/omega0]
    double v0 = 0.0;    // [E0]
    double alpha = 0.0; // [1/omega0]

    Barrier barrier() const { return {v0, alpha}; }
};

/// Throws DomainError unless v0 > 0 and alpha > 0 (finite).
void validate(const Barrier& b);
/// Also requires k > 0.
void validate(const ScatterParams& p);

/// 4 m V0 / (alpha^2 hbar^2) in the global units.
double barrier_strength(const Barrier& b);

/// s = (-1 + sqrt(1 - 2 v0 / alpha^2)) / 2. Complex (-1/2 + i lambda) when
/// the barrier strength exceeds one.
cplx s_parameter(const Barrier& b);

/// True when s = -1/2 + i lambda with lambda > 0.
bool strong_barrier(const Barrier& b);

/// Im s for a strong barrier; throws DomainError otherwise.
double barrier_lambda(const Barrier& b);

/// Relative wavevector k = sqrt(Er / 2) for relative energy Er [E0].
double relative_wavevector_from_energy(double er);

/// Reflection (momentum exchange) and transmission (position exchange)
/// amplitudes of the relative-motion problem.
struct AmplitudePair {
    cplx R;
    cplx T;
};

/// With kappa = k / alpha:
///   T = G(-i kappa - s) G(-i kappa + s + 1) / (G(-i kappa) G(1 - i kappa))
///   R = G(i kappa) G(-i kappa - s) G(-i kappa + s + 1) / (G(-i kappa) G(-s) G(s + 1))
/// R is the ratio of the e^{-ikx} and e^{ikx} coefficients of the
/// hypergeometric solution as x -> -infinity (see wavefunction.hpp).
/// Throws DomainError for k <= 0.
AmplitudePair amplitudes(const ScatterParams& p);

/// Reflection amplitude with the signs of kappa flipped inside the two
/// s-dependent Gammas of the numerator:
///   G(i kappa) G(i kappa - s) G(i kappa + s + 1) / (G(-i kappa) G(-s) G(s + 1)).
/// Same modulus as amplitudes().R, different phase; kept for comparison.
cplx reflection_flipped_numerator(const ScatterParams& p);

/// |T|^2 = sinh^2(pi k / alpha) / (sinh^2(pi k / alpha) + cosh^2(pi lambda)).
/// Strong-barrier regime only (DomainError otherwise).
double closed_form_T2(const ScatterParams& p);

struct PhaseRow {
    double k = 0.0;
    double arg_r = 0.0; // unwrapped, starting from the branch nearest pi
    double r2 = 0.0;
    double t2 = 0.0;
};

/// Evaluates amplitudes on an ascending, strictly positive k grid.
/// Throws std::invalid_argument for an empty or unsorted grid.
std::vector<PhaseRow> phase_sweep(const Barrier& b, std::span<const double> kgrid);

/// steps points log-spaced in [lo, hi] (inclusive); requires 0 < lo < hi.
std::vector<double> log_grid(double lo, double hi, std::size_t steps);

} // namespace flyq::scatter
