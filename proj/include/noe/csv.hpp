#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace noe {

// RFC-4180-style quoting: fields containing commas, quotes or newlines are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(std::string_view field);

// Deterministic shortest-ish rendering; identical inputs give identical text.
std::string format_double(double value);

// Empty string for the undefined marker.
std::string format_optional(const std::optional<double>& value);

}  // namespace noe
