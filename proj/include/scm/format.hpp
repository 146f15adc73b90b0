#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace scm::format {

/// Canonical number rendering for CSV output: '.' decimal separator,
/// 6 significant digits, and a decimal point forced onto integral
/// values ("0.0", "100.0") so columns stay visually typed.
std::string number(double v);

/// CSV field escaping (RFC-4180 style quoting, applied only when needed).
std::string csv_field(std::string_view s);

/// FNV-1a 64-bit digest, rendered as 16 hex digits.
struct Fnv1a64 {
    std::uint64_t state = 14695981039346656037ull;

    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            state ^= c;
            state *= 1099511628211ull;
        }
    }
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string hex16(std::uint64_t value);

}  // namespace scm::format
