#pragma once

#include <stdexcept>
#include <string>

namespace hgiant {

// Error categories surfaced through the CLI exit codes; see tools/main.cpp.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an explicit outcome sequence runs out mid-exploration.
class BitsExhaustedError : public std::runtime_error {
public:
    explicit BitsExhaustedError(const std::string& msg) : std::runtime_error(msg) {}
};

class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hgiant
