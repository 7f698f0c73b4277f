#pragma once

#include <stdexcept>
#include <string>

namespace qcurv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the given parameters (e.g. n = 1 in the radial inverse).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A power-law tail integral that does not converge.
class DivergentTail : public Error {
public:
    using Error::Error;
};

/// Right-hand side outside the zero-mean class required by the decaying inverse.
class ZeroMeanViolation : public Error {
public:
    using Error::Error;
};

/// The requested slope alpha is outside (0, alpha1(K)) or K admits no normal solution.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

/// K vanishes on the whole grid support, so the normalization is undefined.
class DegenerateCurvature : public Error {
public:
    using Error::Error;
};

}  // namespace qcurv
