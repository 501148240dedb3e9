#pragma once

#include <string>

namespace flyq {

/// Locale-independent shortest-general formatting with 15 significant digits.
/// Non-finite values print as "nan", "inf", "-inf".
std::string format_double(double value);

} // namespace flyq
