#include "flyq/simd/dispatch.hpp"

namespace flyq::simd {

bool available(SimdLevel level) noexcept {
    switch (level) {
    case SimdLevel::scalar:
        return true;
    case SimdLevel::avx2:
#if defined(FLYQ_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

SimdLevel best_available() noexcept {
    return available(SimdLevel::avx2) ? SimdLevel::avx2 : SimdLevel::scalar;
}

std::string_view to_string(SimdLevel level) noexcept {
    switch (level) {
    case SimdLevel::scalar:
        return "scalar";
    case SimdLevel::avx2:
        return "avx2";
    }
    return "unknown";
}

std::optional<SimdLevel> parse_level(std::string_view name) noexcept {
    if (name == "scalar") {
        return SimdLevel::scalar;
    }
    if (name == "avx2") {
        return SimdLevel::avx2;
    }
    if (name == "auto") {
        return best_available();
    }
    return std::nullopt;
}

} // namespace flyq::simd
