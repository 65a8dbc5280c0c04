#pragma once

#include <stdexcept>
#include <string>

namespace ch2geo {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GridMismatch : public Error {
public:
    GridMismatch(int n_left, int n_right)
        : Error("grid mismatch: " + std::to_string(n_left) + " vs " + std::to_string(n_right) +
                " points") {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Newton inversion of a circle diffeomorphism failed to converge.
class InversionError : public Error {
public:
    using Error::Error;
};

/// Non-finite value encountered while stepping.
class BlowupError : public Error {
public:
    BlowupError(const std::string& what, double t) : Error(what), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

/// The Lagrangian map lost orientation (min phi_x at or below the floor).
class JacobianDegenerate : public Error {
public:
    using Error::Error;
};

/// Sectional curvature requested for a plane whose Gram determinant vanishes.
class DegeneratePlane : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace ch2geo
