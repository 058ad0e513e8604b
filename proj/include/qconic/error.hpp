#pragma once

#include <stdexcept>
#include <string>

namespace qconic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input: malformed files, invalid arrangements, curves outside the
// supported class.
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation that could not finish: caps exceeded, non-isolated
// singularities.
class ComputationError : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public InputError {
 public:
  using InputError::InputError;
};

class NotReduced : public InputError {
 public:
  using InputError::InputError;
};

class NotSingular : public InputError {
 public:
  using InputError::InputError;
};

class PointNotOnBoth : public InputError {
 public:
  using InputError::InputError;
};

class NonIsolated : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace qconic
