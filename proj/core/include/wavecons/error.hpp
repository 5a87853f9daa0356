#pragma once

#include <stdexcept>
#include <string>

namespace wavecons {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters, missing or extra case fields, bad configuration.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A derivative order beyond what a field declares.
class CapabilityError : public Error {
public:
    using Error::Error;
};

// Non-finite intermediate value.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Exponent beyond the overflow guard.
class OverflowError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

// A characteristic left the initial-data range.
class CoverageError : public Error {
public:
    using Error::Error;
};

// Damping that no point map can remove.
class IntrinsicDampingError : public Error {
public:
    using Error::Error;
};

class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, double time) : Error(what), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

}  // namespace wavecons
