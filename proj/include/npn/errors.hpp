#pragma once

#include <stdexcept>
#include <string>

namespace npn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    NotPositiveDefinite(const std::string& msg, double smallest_eigenvalue)
        : Error(msg), smallest_eigenvalue(smallest_eigenvalue) {}
    double smallest_eigenvalue;
};

class GrowthViolation : public Error {
public:
    using Error::Error;
};

class MaxTermsExceeded : public Error {
public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

class ConvergenceDomainViolation : public Error {
public:
    using Error::Error;
};

class ImaginaryResidue : public Error {
public:
    using Error::Error;
};

class ConstraintViolation : public Error {
public:
    using Error::Error;
};

class UnsupportedRepresentation : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class RatioViolation : public Error {
public:
    using Error::Error;
};

class NonFiniteSample : public Error {
public:
    NonFiniteSample(const std::string& msg, int coordinate, long long draw_index)
        : Error(msg), coordinate(coordinate), draw_index(draw_index) {}
    int coordinate;
    long long draw_index;
};

class IncompatibleMethod : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace npn
