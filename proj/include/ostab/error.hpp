#pragma once

#include <stdexcept>
#include <string>

namespace ostab {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (bad input); anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed tableau, filling, arrangement or text input.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain (column bound violated, cell not
// a corner, markers not in the first row, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A local growth rule received labels that cannot occur in a growth diagram.
class MalformedCellError : public Error {
public:
    using Error::Error;
};

// Backward sweeps: the boundary does not come from any filling.
class ReconstructionError : public Error {
public:
    using Error::Error;
};

// Exhaustive oracles refuse inputs above their size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace ostab
