#include "flyq/simd/network_batch.hpp"

#include <stdexcept>
#include <string>

namespace flyq::simd {

ComplexColumns::ComplexColumns(std::size_t count) : count_(count) {
    for (std::size_t j = 0; j < 4; ++j) {
        re_[j].assign(count, 0.0);
        im_[j].assign(count, 0.0);
    }
}

cplx ComplexColumns::get(std::size_t component, std::size_t index) const {
    return {re_.at(component).at(index), im_.at(component).at(index)};
}

void ComplexColumns::set(std::size_t component, std::size_t index, cplx value) {
    re_.at(component).at(index) = value.real();
    im_.at(component).at(index) = value.imag();
}

ConstColumns ComplexColumns::view() const {
    ConstColumns v;
    for (std::size_t j = 0; j < 4; ++j) {
        v.re[j] = re_[j];
        v.im[j] = im_[j];
    }
    return v;
}

MutableColumns ComplexColumns::view() {
    MutableColumns v;
    for (std::size_t j = 0; j < 4; ++j) {
        v.re[j] = re_[j];
        v.im[j] = im_[j];
    }
    return v;
}

namespace {

template <typename Columns>
std::size_t common_size(const Columns& c) {
    const std::size_t n = c.re[0].size();
    for (std::size_t j = 0; j < 4; ++j) {
        if (c.re[j].size() != n || c.im[j].size() != n) {
            throw std::invalid_argument("complex columns have mismatched lengths");
        }
    }
    return n;
}

SimdLevel resolve(SimdLevel level) {
    if (!available(level)) {
        throw std::invalid_argument("SIMD level '" + std::string(to_string(level)) +
                                    "' is not available on this machine");
    }
    return level;
}

} // namespace

namespace detail {

void network_batch_scalar(const BatchNetwork& net, const ConstColumns& phases,
                          const MutableColumns& out, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
        double w_re[4];
        double w_im[4];
        for (std::size_t j = 0; j < 4; ++j) {
            const double d_re = phases.re[j][i];
            const double d_im = phases.im[j][i];
            const double p_re = net.prepared[j].real();
            const double p_im = net.prepared[j].imag();
            w_re[j] = d_re * p_re - d_im * p_im;
            w_im[j] = d_re * p_im + d_im * p_re;
        }
        double z_re[4];
        double z_im[4];
        for (std::size_t r = 0; r < 4; ++r) {
            double y_re = 0.0;
            double y_im = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                const double m_re = net.middle[r][j].real();
                const double m_im = net.middle[r][j].imag();
                y_re += m_re * w_re[j] - m_im * w_im[j];
                y_im += m_re * w_im[j] + m_im * w_re[j];
            }
            const double d_re = phases.re[r][i];
            const double d_im = phases.im[r][i];
            z_re[r] = d_re * y_re - d_im * y_im;
            z_im[r] = d_re * y_im + d_im * y_re;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            double o_re = 0.0;
            double o_im = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                const double m_re = net.outer[r][j].real();
                const double m_im = net.outer[r][j].imag();
                o_re += m_re * z_re[j] - m_im * z_im[j];
                o_im += m_re * z_im[j] + m_im * z_re[j];
            }
            out.re[r][i] = o_re;
            out.im[r][i] = o_im;
        }
    }
}

void squared_modulus_scalar(const ConstColumns& amplitudes,
                            std::array<std::span<double>, 4> probabilities, std::size_t begin,
                            std::size_t end) {
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = begin; i < end; ++i) {
            const double re = amplitudes.re[j][i];
            const double im = amplitudes.im[j][i];
            probabilities[j][i] = re * re + im * im;
        }
    }
}

} // namespace detail

void network_batch(const BatchNetwork& net, const ConstColumns& phases, const MutableColumns& out,
                   SimdLevel level) {
    const std::size_t n = common_size(phases);
    if (common_size(out) != n) {
        throw std::invalid_argument("output columns do not match the phase batch length");
    }
    std::size_t done = 0;
#if defined(FLYQ_HAVE_AVX2_KERNELS)
    if (resolve(level) == SimdLevel::avx2) {
        detail::network_batch_avx2(net, phases, out, n);
        done = n - n % 4;
    }
#else
    resolve(level);
#endif
    detail::network_batch_scalar(net, phases, out, done, n);
}

void squared_modulus(const ConstColumns& amplitudes, std::array<std::span<double>, 4> probabilities,
                     SimdLevel level) {
    const std::size_t n = common_size(amplitudes);
    for (const auto& col : probabilities) {
        if (col.size() != n) {
            throw std::invalid_argument("probability columns do not match amplitude length");
        }
    }
    std::size_t done = 0;
#if defined(FLYQ_HAVE_AVX2_KERNELS)
    if (resolve(level) == SimdLevel::avx2) {
        detail::squared_modulus_avx2(amplitudes, probabilities, n);
        done = n - n % 4;
    }
#else
    resolve(level);
#endif
    detail::squared_modulus_scalar(amplitudes, probabilities, done, n);
}

} // namespace flyq::simd
