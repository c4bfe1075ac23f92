#pragma once

#include <stdexcept>
#include <string>

namespace tcrit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Input digraph is not a tournament (diagonal arc or a pair that is not
/// oriented exactly one way).
class NotATournament : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotABijection : public Error {
public:
    using Error::Error;
};

/// Arc-equivalence asked about a couple (x, x).
class DegeneratePair : public Error {
public:
    using Error::Error;
};

/// Instance exceeds the documented size cap of an exact algorithm.
class TooLarge : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Operation defined only for indecomposable tournaments.
class NotIndecomposable : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tcrit
