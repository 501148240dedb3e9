#pragma once

#include <complex>

namespace flyq::scatter {

using cplx = std::complex<double>;

/// Gamma function for complex argument (Lanczos, g = 7, nine terms), with the
/// reflection formula for Re z < 1/2. Throws DomainError at the poles
/// z = 0, -1, -2, ...
cplx complex_gamma(cplx z);

/// 1 / Gamma(z); exactly zero at the poles of Gamma.
cplx reciprocal_gamma(cplx z);

/// Gauss hypergeometric 2F1(a, b; c; z) for real z in [0, 1).
///
/// Direct power series for z <= 1/2. For z > 1/2 the standard connection to
/// argument 1 - z is used, which requires c - a - b to be non-integer; when it
/// is an integer the direct series is summed instead and may fail to converge
/// near z = 1. Terms are added until |term| <= 1e-15 |sum| with decreasing
/// terms; more than 1e5 terms raises ConvergenceError. Throws DomainError if c
/// is a non-positive integer or z is outside [0, 1).
cplx hypergeom_2f1(cplx a, cplx b, cplx c, double z);

/// Same as hypergeom_2f1 with 1 - z supplied separately, so that arguments
/// extremely close to 1 keep full relative precision in 1 - z.
cplx hypergeom_2f1(cplx a, cplx b, cplx c, double z, double one_minus_z);

} // namespace flyq::scatter
