#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include "entrobound/entropy.hpp"

namespace entrobound {

/// Locale-independent decimal with 17 significant digits, enough to
/// round-trip any double exactly; infinities print as "inf"/"-inf".
inline std::string format_real(double v) {
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string format_extended(const ExtendedReal& v) {
    return v.is_finite() ? format_real(v.value()) : "inf";
}

}  // namespace entrobound
