#pragma once

#include <stdexcept>
#include <string>

namespace nsmm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad text, out-of-range parameters, invalid labels.
/// The CLI maps these to its usage exit code.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// (p, q) violates the minimal-model constraints.
class InvalidModel : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A mathematically valid request that cannot be completed.
class ComputationError : public Error {
 public:
  using Error::Error;
};

class InhomogeneousError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ReductionError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ParityMismatch : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class UnsupportedSlot : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class InhomogeneityError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class IrregularSingularity : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ResonanceError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class OutOfDisc : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class UnknownWeight : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace nsmm
