#pragma once

#include <stdexcept>
#include <string>

namespace shellrev {

class ShellError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arc coordinate outside the profile's s-domain.
class OutOfDomainError : public ShellError {
public:
    using ShellError::ShellError;
};

/// Evaluation too close to a point with R = 0 (k = 1/R is singular there).
class ApexSingularityError : public ShellError {
public:
    using ShellError::ShellError;
};

/// 2C1+C2 = 0 or 2D1+D2 = 0 (nu = -1 limit); the elastic law is not invertible.
class DegenerateModuliError : public ShellError {
public:
    using ShellError::ShellError;
};

/// All polynomial coefficients numerically zero.
class DegeneratePolynomialError : public ShellError {
public:
    using ShellError::ShellError;
};

/// det of the harmonic 3x3 system below threshold; thickness() is the
/// offending h (a discontinuity thickness).
class SingularSystemError : public ShellError {
public:
    SingularSystemError(double thickness, const std::string& msg)
        : ShellError(msg), h_(thickness) {}
    double thickness() const { return h_; }

private:
    double h_;
};

/// Successive mesh refinements disagree beyond tolerance.
class NoConvergenceError : public ShellError {
public:
    using ShellError::ShellError;
};

/// The discrete boundary-value system is singular.
class IllPosedError : public ShellError {
public:
    using ShellError::ShellError;
};

}  // namespace shellrev
