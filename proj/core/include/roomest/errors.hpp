#pragma once

#include <stdexcept>
#include <string>

namespace roomest {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration value or malformed config/CLI input.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

/// File system / serialization failures.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io: " + msg) {}
};

/// Violated precondition or out-of-domain numeric input.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain: " + msg) {}
};

}  // namespace roomest
