#pragma once

#include <stdexcept>
#include <string>

namespace visang {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Support function is not strictly positive: the origin is not interior.
class NotPositiveError : public Error {
public:
    using Error::Error;
};

/// p + p'' is not strictly positive: boundary is not a convex C^2 curve.
class NotConvexError : public Error {
public:
    using Error::Error;
};

/// Fourier truncation tail of a constructed body exceeds tolerance.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Quadrature failed to reach the requested tolerance within limits.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Query point is not strictly exterior to the body.
class PointNotExteriorError : public Error {
public:
    using Error::Error;
};

/// Tangent-line bracketing did not find exactly two sign changes.
class RootCountError : public Error {
public:
    using Error::Error;
};

/// Direction angle undefined: the point coincides with the origin.
class DegenerateDirectionError : public Error {
public:
    using Error::Error;
};

class UnknownDensityError : public Error {
public:
    using Error::Error;
};

class UnknownIdentityError : public Error {
public:
    using Error::Error;
};

class BadParamError : public Error {
public:
    using Error::Error;
};

/// Exterior integrand failed the O(omega^3) small-angle decay spot check.
class DecayCheckError : public Error {
public:
    using Error::Error;
};

} // namespace visang
