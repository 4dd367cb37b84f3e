#pragma once

#include <stdexcept>
#include <string>

namespace settherm {

/// Bad caller-supplied value (out-of-domain parameter, wrong dimension, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data read from outside the process failed validation (malformed JSON,
/// non-Hermitian matrix, trace not one, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation produced something that should be impossible for valid
/// input (negative reconstructed eigenvalue, exhausted sampling budget).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace settherm
