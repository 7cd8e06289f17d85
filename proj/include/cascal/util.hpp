#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cascal {

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

// Strict parse of a full token; throws std::runtime_error on garbage,
// partial matches, or non-finite values.
double parse_double_strict(std::string_view token, const std::string& context);

std::vector<std::string> split_csv_line(std::string_view line);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace cascal
