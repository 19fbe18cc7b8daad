#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mphylo {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand sizes disagree (matvec, Frobenius distance, ...).
class DimensionError : public Error {
public:
    DimensionError(const std::string& what, std::size_t expected, std::size_t actual)
        : Error(what + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
          expected_(expected), actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class NetworkError : public Error {
public:
    using Error::Error;
};

/// Numerical breakdown (indefinite pivot, non-finite value, singular factor).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace mphylo
