#pragma once

#include <stdexcept>
#include <string>

namespace meyerlab {

// All failures surface as exceptions derived from Error. Callers that need
// soft outcomes (e.g. "none found") get them as return values, never as
// exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainMismatchError : Error {
    explicit DomainMismatchError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Raised when a series result cannot be represented at the requested
// precision (valuation at or above the truncation order, or below the
// Laurent floor).
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

struct ModelMismatchError : Error {
    explicit ModelMismatchError(const std::string& msg) : Error(msg) {}
};

struct WindowError : Error {
    explicit WindowError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct CertificateError : Error {
    explicit CertificateError(const std::string& msg) : Error(msg) {}
};

}  // namespace meyerlab
