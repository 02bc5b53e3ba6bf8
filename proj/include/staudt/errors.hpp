#pragma once

#include <stdexcept>
#include <string>

namespace staudt {

/// Base class for all errors raised on invalid input.  The CLI maps every
/// subclass to exit code 2.
class Error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Two values from different exact fields met in one operation.
class FieldMismatch : public Error
{
public:
    using Error::Error;
};

/// Ambient dimensions (or vector lengths) disagree.
class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

/// A precondition on the input geometry failed: repeated parameter points,
/// points not in general linear position, zero vectors, and so on.
class DegenerateInput : public Error
{
public:
    using Error::Error;
};

/// The field cannot host the requested construction (characteristic too
/// small, too few distinct points).
class BadField : public Error
{
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace staudt
