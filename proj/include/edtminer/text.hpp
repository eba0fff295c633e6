#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edtminer {

/// Shortest decimal form that round-trips the exact double value.
std::string format_double(double value);

/// Parse a full string as a double; nullopt if any trailing garbage or
/// if the value is not finite.
std::optional<double> parse_finite_double(std::string_view text);

std::optional<std::int64_t> parse_int(std::string_view text);

std::string_view trim(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

std::string to_lower(std::string_view text);

}  // namespace edtminer
