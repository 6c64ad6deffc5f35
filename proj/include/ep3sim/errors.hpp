#pragma once

#include <stdexcept>
#include <string>

namespace ep3sim {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid inputs / violated preconditions (CLI exit code 1).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A numerical procedure could not complete (CLI exit code 2).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Discriminant does not change sign inside the requested coupling bracket.
class NoRootInBracket : public NumericalError {
public:
    explicit NoRootInBracket(const std::string& msg) : NumericalError(msg) {}
};

// Dip extraction found a number of qualifying dips other than two.
class DipCountMismatch : public NumericalError {
public:
    DipCountMismatch(const std::string& msg, int count_)
        : NumericalError(msg), count(count_) {}
    int count;
};

// Too few / badly placed samples for the splitting-exponent fit.
class InsufficientSamples : public NumericalError {
public:
    explicit InsufficientSamples(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace ep3sim
