#include "flyq/linalg4.hpp"

#include <algorithm>

namespace flyq {

Matrix4 identity4() {
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
    Matrix4 c{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            const cplx aik = a[i][k];
            for (std::size_t j = 0; j < 4; ++j) {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    return c;
}

Amplitudes4 multiply(const Matrix4& m, const Amplitudes4& v) {
    Amplitudes4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

Matrix4 adjoint(const Matrix4& m) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i][j] = std::conj(m[j][i]);
        }
    }
    return out;
}

Matrix4 diagonal(const Amplitudes4& d) {
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i) {
        m[i][i] = d[i];
    }
    return m;
}

double max_abs_difference(const Matrix4& a, const Matrix4& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
        }
    }
    return worst;
}

double unitarity_defect(const Matrix4& m) {
    return max_abs_difference(multiply(adjoint(m), m), identity4());
}

double norm_squared(const Amplitudes4& v) {
    double sum = 0.0;
    for (const cplx& c : v) {
        sum += std::norm(c);
    }
    return sum;
}

} // namespace flyq
