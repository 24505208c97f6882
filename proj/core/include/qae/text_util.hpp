#pragma once

// Shared tokenizing helpers for the line-oriented text formats.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qae::text {

/// Drops a trailing `#` comment.
std::string_view strip_comment(std::string_view line);
std::string_view trim(std::string_view s);
std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split_ws(std::string_view line);

std::optional<double> parse_double(std::string_view token);
std::optional<long long> parse_int(std::string_view token);

/// Shortest decimal form that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace qae::text
