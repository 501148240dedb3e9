#pragma once

#include <array>
#include <complex>

namespace flyq {

using cplx = std::complex<double>;

// Dense 4x4 complex matrix and 4-vector used by the two-qubit network.
// Row-major: m[row][col].
using Amplitudes4 = std::array<cplx, 4>;
using Matrix4 = std::array<std::array<cplx, 4>, 4>;

Matrix4 identity4();
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Amplitudes4 multiply(const Matrix4& m, const Amplitudes4& v);
Matrix4 adjoint(const Matrix4& m);
Matrix4 diagonal(const Amplitudes4& d);

// max_{ij} |a_ij - b_ij|
double max_abs_difference(const Matrix4& a, const Matrix4& b);

// max_{ij} |(m^dagger m - I)_ij|
double unitarity_defect(const Matrix4& m);

double norm_squared(const Amplitudes4& v);

} // namespace flyq
