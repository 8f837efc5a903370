#pragma once

#include <charconv>
#include <string>

namespace rrtrw {

/// Shortest decimal text that parses back to exactly the same double.
inline std::string decimal_text(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

/// Decimal text with the given number of significant digits (general form).
inline std::string decimal_text(double value, int significant_digits) {
    char buf[48];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, significant_digits);
    return std::string(buf, res.ptr);
}

}  // namespace rrtrw
