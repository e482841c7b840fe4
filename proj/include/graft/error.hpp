#pragma once

#include <stdexcept>
#include <string>

namespace graft {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (unknown vertex, duplicate edge, parity
/// violation, non-minimum join passed where a minimum one is required, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A query outside the defined domain of an operation, e.g. a distance
/// between vertices of different connected components.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An exhaustive computation was requested beyond its configured bound.
/// Oversized requests are refused rather than silently truncated.
class BoundError : public Error {
public:
    explicit BoundError(const std::string& what) : Error(what) {}
};

} // namespace graft
