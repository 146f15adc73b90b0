#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scm::text {

/// ASCII lowercase. Non-ASCII bytes pass through unchanged (input is
/// assumed NFC; no further Unicode normalization is applied).
std::string fold_case(std::string_view s);

/// Strip leading and trailing ASCII whitespace.
std::string_view trim(std::string_view s);

/// Split on runs of ASCII whitespace; empty tokens are never produced.
std::vector<std::string> split_whitespace(std::string_view s);

/// Split on a single-character delimiter, keeping empty fields.
std::vector<std::string> split(std::string_view s, char delim);

/// Remove leading and trailing ASCII punctuation.
std::string_view strip_edge_punct(std::string_view token);

bool has_internal_whitespace(std::string_view s);

}  // namespace scm::text
