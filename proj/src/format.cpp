#include "flyq/format.hpp"

#include <charconv>
#include <cmath>

namespace flyq {

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        value = 0.0; // drop the sign of -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

} // namespace flyq
