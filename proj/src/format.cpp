#include "scm/format.hpp"

#include <cmath>
#include <cstdio>

namespace scm::format {

std::string number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // collapse -0
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

std::string csv_field(std::string_view s) {
    bool needs_quote = s.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quote) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    Fnv1a64 acc;
    acc.update(bytes);
    return acc.state;
}

std::string hex16(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::string fnv1a64_hex(std::string_view bytes) { return hex16(fnv1a64(bytes)); }

}  // namespace scm::format
