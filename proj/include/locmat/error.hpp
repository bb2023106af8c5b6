#pragma once

#include <stdexcept>
#include <string>

namespace locmat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (Steinitz expressions, field names, matrix literals).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A number that must be prime is not.
class NotPrimeError : public Error {
public:
    using Error::Error;
};

/// Operands live over different fields.
class SpecMismatchError : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible sizes.
class SizeMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The simplicity criteria require a ground field of characteristic other than 2.
class UnsupportedCharacteristicError : public Error {
public:
    using Error::Error;
};

} // namespace locmat
