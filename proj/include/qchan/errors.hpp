#pragma once

#include <stdexcept>

namespace qchan {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bloch vector with squared norm beyond the accepted ball.
class InvalidBloch : public Error {
public:
  using Error::Error;
};

/// Density matrix failing the Hermitian / unit-trace / positivity checks.
class InvalidState : public Error {
public:
  using Error::Error;
};

/// Parameter outside its documented domain.
class OutOfRange : public Error {
public:
  using Error::Error;
};

/// Determinant below the negative tolerance in the fidelity formula.
class NegativeDet : public Error {
public:
  using Error::Error;
};

/// Kraus set violating the completeness relation beyond tolerance.
class IncompleteKraus : public Error {
public:
  using Error::Error;
};

/// Matrix handed to the symmetric eigensolver that is not symmetric.
class NotSymmetric : public Error {
public:
  using Error::Error;
};

/// Memory kernel escaped [-1, 1]; indicates a kernel evaluation bug.
class KernelOutOfRange : public Error {
public:
  using Error::Error;
};

/// Invalid sweep configuration; message names the offending field.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Figure preset name that does not exist.
class UnknownFigure : public Error {
public:
  using Error::Error;
};

/// File I/O failure; message carries the path.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace qchan
