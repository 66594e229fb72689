#include "noe/csv.hpp"

#include <cmath>
#include <cstdio>

namespace noe {

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    // Round-trippable and stable across runs; trailing zeros trimmed so the
    // common short values stay short.
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    double parsed = 0.0;
    for (int precision = 1; precision <= 16; ++precision) {
        char candidate[64];
        std::snprintf(candidate, sizeof candidate, "%.*g", precision, value);
        std::sscanf(candidate, "%lf", &parsed);
        if (parsed == value) return candidate;
    }
    return buffer;
}

std::string format_optional(const std::optional<double>& value) {
    if (!value) return std::string();
    return format_double(*value);
}

}  // namespace noe
