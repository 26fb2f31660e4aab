#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcsmith {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched shapes: different rings, variable counts, precisions, grid sizes.
class StructuralError : public Error {
public:
    using Error::Error;
};

// The requested coefficient map has no canonical homomorphism.
class UnsupportedMapError : public Error {
public:
    using Error::Error;
};

// An operation precondition was violated (non-contractible vertex,
// nonzero constant term, arc outside the special fiber, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Bad user configuration: missing seed, unknown frame, inconsistent point data.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Completing the operation would exceed a configured resource limit.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// An internal consistency certification failed. This is a generation bug,
// not a user error; callers are expected to abort.
class CertificationError : public Error {
public:
    using Error::Error;
};

// Syntax error in an expression or input file. position is a 1-based column
// (for files, a line number is included in the message instead).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace arcsmith
