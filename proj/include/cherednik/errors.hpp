#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonIntegralInput : public Error {
public:
    using Error::Error;
};

class NonIntegralValues : public Error {
public:
    using Error::Error;
};

class ModeMismatch : public Error {
public:
    using Error::Error;
};

class NotPolynomialPreserving : public Error {
public:
    using Error::Error;
};

class NotInDP : public Error {
public:
    using Error::Error;
};

// Raised when a certified member decomposes with non-integral coefficients.
// Reaching it means the engine is wrong, not the input.
class NonIntegralCoefficients : public Error {
public:
    using Error::Error;
};

class OutOfModule : public Error {
public:
    OutOfModule(std::string msg, long index)
        : Error(std::move(msg)), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected)
        : Error(std::move(msg)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace cherednik
