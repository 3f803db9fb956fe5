#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polarix {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range caller input (bad state syntax, angle outside its domain, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The requested configuration is physically unrealizable.
class PhysicsError : public Error {
public:
    using Error::Error;
};

/// A waveguide mode is below cutoff at the configured wavenumber.
class EvanescentMode : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// No real Rabi frequency realizes the requested alpha at the given detunings.
class InfeasibleDrive : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// The scattering problem has no unique solution (emitter fully decoupled and undriven).
class DegenerateConfiguration : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// The inverse problem is 0/0 and cannot be resolved.
class IllConditioned : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// Wraps an angle into [lo, lo + period).
double wrap_angle(double angle, double lo, double period);

}  // namespace polarix
