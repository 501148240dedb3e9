#pragma once

#include "flyq/scatter/amplitudes.hpp"

namespace flyq::scatter {

/// Relative-motion eigenfunction
///   phi(x) = (1 - zeta^2)^{-ik/(2 alpha)} F(-ik/alpha - s, -ik/alpha + s + 1, -ik/alpha + 1, (1 - zeta)/2)
/// with zeta = tanh(alpha x). Unnormalized: its incoming coefficient is not 1.
/// Throws DomainError for |x| > 50 / alpha.
cplx wavefunction_probe(const ScatterParams& p, double x);

/// d phi / dx, from d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z).
cplx wavefunction_derivative(const ScatterParams& p, double x);

/// Plane-wave coefficients recovered from phi and phi' at a single point:
/// phi = incoming e^{ikx} + outgoing e^{-ikx}.
struct PlaneWaveSplit {
    cplx incoming;
    cplx outgoing;
};

PlaneWaveSplit split_plane_waves(const ScatterParams& p, double x);

/// R = outgoing(-X) / incoming(-X), T = incoming(+X) / incoming(-X).
AmplitudePair fit_asymptotic_amplitudes(const ScatterParams& p, double x_far);

/// How a relative wavevector is formed from two single-electron ones.
enum class RelativeMomentum {
    half_difference, // k = (kA - kB) / 2, matching p = (pA - pB) / 2
    full_difference  // k = kA - kB
};

double relative_wavevector(double ka, double kb, RelativeMomentum rule);

enum class Side { in, out };

/// Two-electron asymptotic wavefunction. `in`: e^{i kA xA} e^{i kB xB};
/// `out`: T e^{i kA xA} e^{i kB xB} + R e^{i kB xA} e^{i kA xB}.
/// Requires kA > kB (DomainError otherwise).
cplx total_wavefunction(double ka, double kb, double xa, double xb, Side side,
                        const Barrier& barrier,
                        RelativeMomentum rule = RelativeMomentum::half_difference);

} // namespace flyq::scatter
