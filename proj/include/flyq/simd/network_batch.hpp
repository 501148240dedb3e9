#pragma once

#include "flyq/linalg4.hpp"
#include "flyq/simd/dispatch.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace flyq::simd {

// Structure-of-arrays complex columns: column j holds component j of a batch
// of 4-vectors.
struct ConstColumns {
    std::array<std::span<const double>, 4> re;
    std::array<std::span<const double>, 4> im;
};

struct MutableColumns {
    std::array<std::span<double>, 4> re;
    std::array<std::span<double>, 4> im;
};

class ComplexColumns {
public:
    explicit ComplexColumns(std::size_t count);

    std::size_t size() const noexcept { return count_; }
    cplx get(std::size_t component, std::size_t index) const;
    void set(std::size_t component, std::size_t index, cplx value);

    ConstColumns view() const;
    MutableColumns view();

private:
    std::size_t count_;
    std::array<std::vector<double>, 4> re_;
    std::array<std::vector<double>, 4> im_;
};

/// Fixed part of the batched network evaluation
///     out = outer * D * middle * D * prepared
/// where D = diag(phases) varies per batch element and `prepared` is the
/// input state after the innermost fixed factor.
struct BatchNetwork {
    Matrix4 outer;
    Matrix4 middle;
    Amplitudes4 prepared;
};

/// `phases` and `out` must all have the same length.
void network_batch(const BatchNetwork& net, const ConstColumns& phases, const MutableColumns& out,
                   SimdLevel level);

/// probabilities[j][i] = |out_j[i]|^2
void squared_modulus(const ConstColumns& amplitudes, std::array<std::span<double>, 4> probabilities,
                     SimdLevel level);

namespace detail {
void network_batch_scalar(const BatchNetwork& net, const ConstColumns& phases,
                          const MutableColumns& out, std::size_t begin, std::size_t end);
void squared_modulus_scalar(const ConstColumns& amplitudes,
                            std::array<std::span<double>, 4> probabilities, std::size_t begin,
                            std::size_t end);
#if defined(FLYQ_HAVE_AVX2_KERNELS)
// Process [0, count - count % 4); the caller finishes the tail.
void network_batch_avx2(const BatchNetwork& net, const ConstColumns& phases,
                        const MutableColumns& out, std::size_t count);
void squared_modulus_avx2(const ConstColumns& amplitudes,
                          std::array<std::span<double>, 4> probabilities, std::size_t count);
#endif
} // namespace detail

} // namespace flyq::simd
