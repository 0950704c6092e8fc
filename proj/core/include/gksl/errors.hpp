#pragma once

#include <stdexcept>
#include <string>

namespace gksl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix/vector dimensions do not match the operation's requirements.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A requested object would exceed a configured size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A coefficient matrix violates its statistics-dependent symmetry class.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent caller input (mismatched systems, bad time grids,
/// unparsable config fields).
class InputError : public Error {
public:
    using Error::Error;
};

/// A state specification fails its validity conditions (positivity, trace).
class StateError : public Error {
public:
    using Error::Error;
};

/// det(e^{MJ} - I) vanishes, so the Gaussian normalization is undefined.
class SingularNormalizationError : public Error {
public:
    using Error::Error;
};

/// The truncated Fock space cannot represent the requested state or has been
/// contaminated at the basis edge during evolution.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// An operation was configured inconsistently (e.g. a sub-block buffer larger
/// than the cutoff).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Numerical integration could not proceed (step underflow).
class IntegrationError : public Error {
public:
    using Error::Error;
};

} // namespace gksl
