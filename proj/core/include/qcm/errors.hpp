#pragma once

#include <stdexcept>
#include <string>

namespace qcm {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented precondition (unphysical state, bad angle,
// malformed matrix).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The channel action does not preserve the trace.
class NotTracePreserving : public Error {
 public:
  using Error::Error;
};

// The map has (numerically) zero determinant, so no generator exists.
class NonInvertibleMap : public Error {
 public:
  NonInvertibleMap() : Error("non-invertible map, no generator") {}
  explicit NonInvertibleMap(const std::string& what) : Error(what) {}
};

// A real eigenvalue sits on the closed negative real axis; the principal
// logarithm is not defined.
class BranchAmbiguity : public Error {
 public:
  BranchAmbiguity() : Error("logarithm branch ambiguity") {}
  explicit BranchAmbiguity(const std::string& what) : Error(what) {}
};

// Eigenvector basis too ill-conditioned for a diagonalization-based matrix
// function.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

}  // namespace qcm
