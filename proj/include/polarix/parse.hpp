#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace polarix {

/// Locale-independent decimal parse of the whole token; throws InvalidArgument.
double parse_double(std::string_view text, std::string_view what);

/// Angle with optional `deg` or `rad` suffix; a bare number is radians.
double parse_angle(std::string_view text, std::string_view what);

/// 17 significant digits, `.` decimal point, no locale.
std::string format_double(double value);

std::vector<std::string_view> split(std::string_view text, char sep);

std::string_view trim(std::string_view text);

}  // namespace polarix
