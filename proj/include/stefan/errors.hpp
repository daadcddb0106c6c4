#pragma once

#include <stdexcept>
#include <string>

namespace stefan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series or iteration hit its cap before reaching the requested accuracy.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A bracketing scan found no sign change.
class NoRootError : public Error {
public:
    using Error::Error;
};

/// bisect() called on an interval without a sign change.
class BadBracketError : public Error {
public:
    using Error::Error;
};

}  // namespace stefan
