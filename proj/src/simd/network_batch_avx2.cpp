// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "flyq/simd/network_batch.hpp"

#include <immintrin.h>

namespace flyq::simd::detail {

namespace {

struct Lane {
    __m256d re;
    __m256d im;
};

inline Lane mul(Lane a, Lane b) {
    return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
            _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

// acc += m * w with m broadcast.
inline void fma_broadcast(Lane& acc, cplx m, Lane w) {
    const __m256d m_re = _mm256_set1_pd(m.real());
    const __m256d m_im = _mm256_set1_pd(m.imag());
    acc.re = _mm256_fmadd_pd(m_re, w.re, acc.re);
    acc.re = _mm256_fnmadd_pd(m_im, w.im, acc.re);
    acc.im = _mm256_fmadd_pd(m_re, w.im, acc.im);
    acc.im = _mm256_fmadd_pd(m_im, w.re, acc.im);
}

} // namespace

void network_batch_avx2(const BatchNetwork& net, const ConstColumns& phases,
                        const MutableColumns& out, std::size_t count) {
    Lane prepared[4];
    for (std::size_t j = 0; j < 4; ++j) {
        prepared[j] = {_mm256_set1_pd(net.prepared[j].real()),
                       _mm256_set1_pd(net.prepared[j].imag())};
    }
    const std::size_t vec_end = count - count % 4;
    for (std::size_t i = 0; i < vec_end; i += 4) {
        Lane d[4];
        Lane w[4];
        for (std::size_t j = 0; j < 4; ++j) {
            d[j] = {_mm256_loadu_pd(phases.re[j].data() + i),
                    _mm256_loadu_pd(phases.im[j].data() + i)};
            w[j] = mul(d[j], prepared[j]);
        }
        Lane z[4];
        for (std::size_t r = 0; r < 4; ++r) {
            Lane y{_mm256_setzero_pd(), _mm256_setzero_pd()};
            for (std::size_t j = 0; j < 4; ++j) {
                fma_broadcast(y, net.middle[r][j], w[j]);
            }
            z[r] = mul(d[r], y);
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Lane o{_mm256_setzero_pd(), _mm256_setzero_pd()};
            for (std::size_t j = 0; j < 4; ++j) {
                fma_broadcast(o, net.outer[r][j], z[j]);
            }
            _mm256_storeu_pd(out.re[r].data() + i, o.re);
            _mm256_storeu_pd(out.im[r].data() + i, o.im);
        }
    }
}

void squared_modulus_avx2(const ConstColumns& amplitudes,
                          std::array<std::span<double>, 4> probabilities, std::size_t count) {
    const std::size_t vec_end = count - count % 4;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < vec_end; i += 4) {
            const __m256d re = _mm256_loadu_pd(amplitudes.re[j].data() + i);
            const __m256d im = _mm256_loadu_pd(amplitudes.im[j].data() + i);
            _mm256_storeu_pd(probabilities[j].data() + i,
                             _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im)));
        }
    }
}

} // namespace flyq::simd::detail
