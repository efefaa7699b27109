#pragma once

#include <stdexcept>
#include <string>

namespace neq {

/// File could not be opened, or ended mid-record.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Well-formed I/O but malformed content (bad dimension header, non-finite
/// value, out-of-range entry for the target format).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid parameter combination (d not divisible by M, unknown config key).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Stored index failed validation (magic, version, checksum).
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace neq
