#pragma once

#include <stdexcept>
#include <string>

namespace sep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph text or unreadable input.
class ParseError : public Error {
public:
    using Error::Error;
};

// An operation was called on an input outside its domain
// (e.g. the matching formula on a graph with two even cycles through one edge).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An enumeration or scan would exceed its configured budget.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

// Two computations that must agree did not. Always a bug.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace sep
