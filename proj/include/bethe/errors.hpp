#pragma once

#include <stdexcept>
#include <string>

namespace bethe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A guarded denominator came within the singularity threshold.
class SingularArgument : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Requested size exceeds the cap of an enumerating evaluator.
class SizeLimit : public Error {
public:
    using Error::Error;
};

/// Input lies outside the domain an evaluator is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

class SamplingExhausted : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

}  // namespace bethe
