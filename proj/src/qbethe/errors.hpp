#pragma once

#include <stdexcept>
#include <string>

namespace qbethe {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A computation hit a point outside its mathematical domain
// (division by zero, pole of a rational function, inverting a
// series with vanishing constant term, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Caller passed structurally invalid input (bad sizes, indices out of
// range, malformed text forms, ...).
class InvalidArgError : public Error {
public:
    explicit InvalidArgError(const std::string& what) : Error(what) {}
};

} // namespace qbethe
