#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypgroup {

// Root of the library's error hierarchy. Every failure the library reports
// deliberately is a subclass of Error; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed group-description text. `position` is the byte offset of the
// offending token; `expected` names what the parser was looking for.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected, const std::string& found)
        : Error("syntax error at position " + std::to_string(position) + ": expected " +
                expected + ", found " + found),
          position(position), expected(expected), found(found) {}
    std::size_t position;
    std::string expected;
    std::string found;
};

// Structurally valid description that violates a model-level rule
// (e.g. a generating set for Z whose entries share a common factor).
class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& msg) : Error(msg) {}
};

// A validation cap on model parameters was exceeded (rank, modulus, depth...).
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

// Estimated memory for an enumeration exceeded the configured cap.
// `completed_radius` is the largest radius fully enumerated before bailing.
class MemCapExceeded : public Error {
public:
    MemCapExceeded(const std::string& msg, int completed_radius)
        : Error(msg), completed_radius(completed_radius) {}
    int completed_radius;
};

// Index or radius outside the valid range of a computed table.
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

// A search hit its vertex cap before producing a definite answer.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// A candidate generating set is not closed under inverses.
class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& msg) : Error(msg) {}
};

// The requested computation has no implementation for this model.
class Unsupported : public Error {
public:
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};

// Not enough data points to run an estimator (window too long, etc.).
class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

// A truncated power series was too short to certify a stable root.
class SeriesTooShort : public Error {
public:
    explicit SeriesTooShort(const std::string& msg) : Error(msg) {}
};

// Operation applied to a group model it is not defined for.
class WrongModel : public Error {
public:
    explicit WrongModel(const std::string& msg) : Error(msg) {}
};

// Formula arguments outside its domain of validity.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Three numbers that cannot be the pairwise distances of three points.
class TriangleViolation : public Error {
public:
    explicit TriangleViolation(const std::string& msg) : Error(msg) {}
};

// A table/estimate was requested beyond the range it was built for.
class InsufficientRange : public Error {
public:
    explicit InsufficientRange(const std::string& msg) : Error(msg) {}
};

// An exact integer result would need more bits than the configured ceiling.
class PrecisionCap : public Error {
public:
    explicit PrecisionCap(const std::string& msg) : Error(msg) {}
};

// Integer arithmetic would overflow a fixed-width type.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

} // namespace hypgroup
