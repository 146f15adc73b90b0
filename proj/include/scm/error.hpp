#pragma once

#include <stdexcept>
#include <string>

namespace scm {

/// Base error for all pipeline failures (maps to CLI exit code 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration / input-wiring error (maps to CLI exit code 2).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Malformed input file contents.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace scm
