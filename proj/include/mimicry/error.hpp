#pragma once

#include <stdexcept>
#include <string>

namespace mimicry {

// Base for every error raised by the library. Callers that only care about
// "something failed" catch this; tests and the CLI distinguish the subtypes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input structure (missing header, unknown column).
class FormatError : public Error {
public:
    using Error::Error;
};

// Input parsed but contained nothing usable.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

// Filtering left no trading dates.
class NoDataError : public Error {
public:
    using Error::Error;
};

// Too few observations for the requested window or operation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// File system failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mimicry
