#pragma once
#include <stdexcept>
#include <string>

namespace leibcoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied data (files, labels, parameters). CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};
struct ParseError : InputError {
    using InputError::InputError;
};
struct GradingError : InputError {
    using InputError::InputError;
};

// A computation whose preconditions are not met. CLI exit code 1.
struct PreconditionError : Error {
    using Error::Error;
};
struct DimensionError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ContainmentError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct WellDefinednessError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotACocycleError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct UnsupportedError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct GuardError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct CancelledError : Error {
    CancelledError() : Error("operation cancelled") {}
};

} // namespace leibcoh
