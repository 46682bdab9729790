#pragma once

#include <stdexcept>
#include <string>

namespace specscale {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch (non-square input, mismatched pair dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input failed a numerical invariant (non-Hermitian, non-unit direction, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its domain, e.g. pencil work with A2 = 0.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// det(A1 + lambda A2) vanishes identically; callers must branch on this.
class SingularPencilError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace specscale
