#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace rffrc::csv {

/// Format a double with 17 significant digits (lossless round trip).
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) {
        return std::strtod(s.c_str(), nullptr);
    }
    return v;
}

}  // namespace rffrc::csv
