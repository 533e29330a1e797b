#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "striptex/error.hpp"

namespace striptex {

// Shortest decimal representation that parses back to the exact same double
// (std::to_chars round-trip guarantee). Integral values get a trailing ".0"
// so a reader can tell float columns from integer ones.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".eEnN") == std::string::npos) s += ".0";
    return s;
}

inline double parse_double(std::string_view text) {
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        fail(errc::bad_config, "not a decimal number: '" + std::string(text) + "'");
    return v;
}

inline long long parse_int(std::string_view text) {
    long long v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        fail(errc::bad_config, "not an integer: '" + std::string(text) + "'");
    return v;
}

inline std::vector<std::string> split(std::string_view text, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            break;
        }
        out.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

} // namespace striptex
