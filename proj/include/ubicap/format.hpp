#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "ubicap/errors.hpp"

namespace ubicap {

// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

// Strict full-string numeric parse; `context` names the key or location.
inline double parse_double(std::string_view text, const std::string& context) {
    double value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw validation_error({context + ": not a numeric literal: '" + std::string(text) + "'"});
    return value;
}

} // namespace ubicap
