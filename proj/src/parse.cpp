#include "polarix/parse.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "polarix/core.hpp"

namespace polarix {

double parse_double(std::string_view text, std::string_view what) {
    const auto token = trim(text);
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw InvalidArgument("invalid number for " + std::string(what) + ": '" +
                              std::string(text) + "'");
    }
    return value;
}

double parse_angle(std::string_view text, std::string_view what) {
    auto token = trim(text);
    if (token.ends_with("deg")) {
        return parse_double(token.substr(0, token.size() - 3), what) * kPi / 180.0;
    }
    if (token.ends_with("rad")) token.remove_suffix(3);
    return parse_double(token, what);
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw Error("number formatting failed");
    return std::string(buf, ptr);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

}  // namespace polarix
