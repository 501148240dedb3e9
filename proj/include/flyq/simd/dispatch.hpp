#pragma once

#include <optional>
#include <string_view>

namespace flyq::simd {

enum class SimdLevel { scalar, avx2 };

/// True if this build contains kernels for `level` and the running CPU
/// supports them.
bool available(SimdLevel level) noexcept;

/// Widest level that is `available`.
SimdLevel best_available() noexcept;

std::string_view to_string(SimdLevel level) noexcept;

/// Accepts "scalar", "avx2" and "auto" (-> best_available()).
std::optional<SimdLevel> parse_level(std::string_view name) noexcept;

} // namespace flyq::simd
