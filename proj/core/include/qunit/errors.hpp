#pragma once

#include <stdexcept>
#include <string>

namespace qunit {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument exceeds a size guard (N, n, n^N, factorial range).
class BoundsError : public Error {
 public:
  using Error::Error;
};

// An argument is structurally invalid for the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical object fails its validity check (e.g. a density matrix with
// negative eigenvalues beyond tolerance).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The requested combination is not implemented (e.g. coupled basis for n != 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A state is parallel to its own conjugate, so conjugate pairing yields
// nothing new.
class DegeneratePairError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qunit
