#pragma once

#include <string_view>

namespace scm {

inline constexpr std::string_view kToolName = "scm";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace scm
